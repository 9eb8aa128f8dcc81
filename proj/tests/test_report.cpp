#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "gmd/printed.hpp"
#include "gmd/report.hpp"
#include "gmd/report_json.hpp"
#include "gmd/suite.hpp"

using namespace gmd;

TEST_CASE("check builder") {
  CheckBuilder a("x", 1e-3);
  a.add(1e-4);
  a.add(5e-4);
  const CheckResult ra = a.finish();
  CHECK(ra.passed);
  CHECK(ra.max_residual == 5e-4);
  CHECK(ra.n_evaluated == 2);

  CheckBuilder b("y", 1e-3);
  b.add(std::numeric_limits<double>::quiet_NaN());
  CHECK_FALSE(b.finish().passed);

  CheckBuilder c("z", 1.0);
  c.skip();
  const CheckResult rc = c.finish();
  CHECK_FALSE(rc.passed);
  CHECK(rc.n_skipped == 1);
}

TEST_CASE("reports serialize with schema version and round-trip doubles") {
  SuiteConfig cfg;
  cfg.samples = 20;
  cfg.seed = 42;
  const VerificationReport rep =
      run_family_suite(FamilyId::G4, FamilyParams::with_lambdas(0, 2), cfg);
  CHECK(rep.passed());
  const nlohmann::json j = report_json(rep);
  CHECK(j["family"] == "G4");
  CHECK(j["params"]["lambda2"] == 2.0);
  CHECK(j["checks"].size() == rep.checks.size());
  for (std::size_t i = 0; i < rep.checks.size(); ++i)
    CHECK(j["checks"][i]["max_residual"].get<double>() == rep.checks[i].max_residual);
  CHECK(SCHEMA_VERSION == 1);

  // Same seed, same report apart from timing.
  nlohmann::json again = report_json(run_family_suite(FamilyId::G4,
                                                      FamilyParams::with_lambdas(0, 2), cfg));
  nlohmann::json first = j;
  first.erase("wall_time_ms");
  again.erase("wall_time_ms");
  CHECK(first.dump() == again.dump());
}

TEST_CASE("atomic write replaces the target") {
  const auto dir = std::filesystem::temp_directory_path() / "gmd_report_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "r.json").string();
  write_atomically(path, "{\"a\":1}\n");
  write_atomically(path, "{\"a\":2}\n");
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "{\"a\":2}\n");
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("unsupported families are reported, not failed") {
  SuiteConfig cfg;
  cfg.samples = 10;
  const VerificationReport rep = run_family_suite(FamilyId::G9, {}, cfg);
  CHECK(rep.passed());
  bool found = false;
  for (const auto &u : rep.unsupported)
    found = found || u.find("unsupported ([t-v])") != std::string::npos;
  CHECK(found);
}

TEST_CASE("printed Kirillov matrices agree with the structure constants") {
  for (FamilyId id : all_families()) {
    if (!has_printed_kirillov(id))
      continue;
    for (const auto &p : default_grid(id)) {
      CAPTURE(to_string(id));
      CHECK(golden_kirillov_check(id, p).passed);
    }
  }
}

TEST_CASE("G8 printed matrix has one self-inconsistent cell") {
  std::vector<CellMismatch> mm;
  const CheckResult r = golden_kirillov_check(FamilyId::G8, FamilyParams::with_lambda(1), &mm);
  CHECK(r.passed);
  CHECK_FALSE(r.note.empty());
}

TEST_CASE("printed exp entries for G12 and the G13 λ=0 case") {
  CHECK(printed_exp_check(FamilyId::G12, FamilyParams::with_lambda(2), 30, 1).passed);
  CHECK(printed_exp_check(FamilyId::G13, FamilyParams::with_lambda(0), 30, 1).passed);
  CHECK(printed_exp_check(FamilyId::G4, FamilyParams::with_lambdas(0, 2), 30, 1).passed);
}
