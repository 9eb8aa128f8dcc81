#include "gmd/report_json.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace gmd {

using nlohmann::json;

json params_json(const FamilyParams &p) {
  json j = json::object();
  if (p.lambda)
    j["lambda"] = p.l();
  if (p.lambda1)
    j["lambda1"] = p.l1();
  if (p.lambda2)
    j["lambda2"] = p.l2();
  return j;
}

json vec_json(const Vec7 &v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i)
    a.push_back(v(i));
  return a;
}

json check_json(const CheckResult &c) {
  json j = {{"name", c.name},
            {"passed", c.passed},
            {"max_residual", c.max_residual},
            {"tolerance", c.tolerance},
            {"n_evaluated", c.n_evaluated},
            {"n_skipped", c.n_skipped},
            {"worst_sample", c.worst_sample ? vec_json(*c.worst_sample) : json(nullptr)}};
  if (!c.note.empty())
    j["note"] = c.note;
  return j;
}

json report_json(const VerificationReport &r) {
  json checks = json::array();
  for (const auto &c : r.checks)
    checks.push_back(check_json(c));
  return {{"family", r.family},
          {"params", params_json(r.params)},
          {"seed", r.seed},
          {"samples", r.samples},
          {"passed", r.passed()},
          {"checks", checks},
          {"unsupported", r.unsupported},
          {"wall_time_ms", r.wall_time_ms}};
}

void write_atomically(const std::string &path, const std::string &text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out)
      throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

} // namespace gmd
