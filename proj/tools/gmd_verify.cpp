// Command-line driver: catalog, verify, classify, orbit.

#include <cmath>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gmd/catalog.hpp"
#include "gmd/coadjoint.hpp"
#include "gmd/errors.hpp"
#include "gmd/foliation.hpp"
#include "gmd/report_json.hpp"
#include "gmd/suite.hpp"
#include "gmd/topology.hpp"

using namespace gmd;
using nlohmann::json;

namespace {

constexpr int EXIT_PASS = 0;
constexpr int EXIT_CHECK_FAILED = 1;
constexpr int EXIT_USAGE = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "3", "-0.25", "1/3", "2.5e-1" -> exact rational.
Rational parse_rational(const std::string &text) {
  std::string s = text;
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  if (s.empty())
    throw UsageError("empty number");
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      const Rational num = parse_rational(s.substr(0, slash));
      const Rational den = parse_rational(s.substr(slash + 1));
      if (den == 0)
        throw UsageError("zero denominator in " + text);
      return num / den;
    }
    int exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
      exponent = std::stoi(s.substr(e + 1));
      s = s.substr(0, e);
    }
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      s = s.substr(1);
    }
    std::string digits;
    int frac = 0;
    bool dot = false;
    for (char c : s) {
      if (c == '.' && !dot) {
        dot = true;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        frac += dot;
      } else {
        throw UsageError("not a number: " + text);
      }
    }
    if (digits.empty())
      throw UsageError("not a number: " + text);
    Rational r{boost::multiprecision::cpp_int(digits)};
    const int shift = exponent - frac;
    const boost::multiprecision::cpp_int ten = 10;
    if (shift > 0)
      r *= Rational(boost::multiprecision::pow(ten, shift));
    else if (shift < 0)
      r /= Rational(boost::multiprecision::pow(ten, -shift));
    return neg ? -r : r;
  } catch (const std::logic_error &) {
    throw UsageError("not a number: " + text);
  }
}

// Comma separated values, each a number or lo:hi:step.
std::vector<Rational> parse_grid(const std::string &text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto c1 = item.find(':');
    if (c1 == std::string::npos) {
      out.push_back(parse_rational(item));
      continue;
    }
    const auto c2 = item.find(':', c1 + 1);
    if (c2 == std::string::npos)
      throw UsageError("range needs lo:hi:step, got " + item);
    const Rational lo = parse_rational(item.substr(0, c1));
    const Rational hi = parse_rational(item.substr(c1 + 1, c2 - c1 - 1));
    const Rational step = parse_rational(item.substr(c2 + 1));
    if (step <= 0)
      throw UsageError("range step must be positive: " + item);
    for (Rational v = lo; v <= hi; v += step)
      out.push_back(v);
  }
  if (out.empty())
    throw UsageError("empty parameter list");
  return out;
}

struct Options {
  std::string family = "all";
  std::string l, l1, l2;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  double rank_tol = 1e-9, inv_tol = 1e-7, flow_tol = 1e-6;
  std::string out;
  bool json = false;
  std::string functional;
};

void add_common(CLI::App *cmd, Options &o, bool params) {
  if (params) {
    cmd->add_option("--family", o.family, "G1..G16 or all");
    cmd->add_option("--l", o.l, "λ values: list or lo:hi:step");
    cmd->add_option("--l1", o.l1, "λ1 values");
    cmd->add_option("--l2", o.l2, "λ2 values");
    cmd->add_option("--samples", o.samples, "samples per check")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "RNG seed");
    cmd->add_option("--rank-tol", o.rank_tol, "relative rank tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--inv-tol", o.inv_tol, "invariant tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--flow-tol", o.flow_tol, "flow tolerance")->check(CLI::PositiveNumber);
  }
  cmd->add_option("--out", o.out, "write JSON report to this path");
  cmd->add_flag("--json", o.json, "JSON on standard output");
}

std::vector<FamilyId> selected_families(const std::string &sel) {
  if (sel == "all")
    return all_families();
  auto id = parse_family(sel);
  if (!id)
    throw UsageError("unknown family: " + sel);
  return {*id};
}

// Explicit grids apply to the families that take the parameter; missing
// ones fall back to the default probes.
std::vector<FamilyParams> grid_for(FamilyId id, const Options &o, bool single_family) {
  const ParamShape shape = param_shape(id);
  if (single_family) {
    if (!shape.lambda && !o.l.empty())
      throw UsageError(to_string(id) + " takes no parameter λ");
    if (!shape.lambda12 && (!o.l1.empty() || !o.l2.empty()))
      throw UsageError(to_string(id) + " takes no parameters λ1, λ2");
  }
  std::vector<FamilyParams> out;
  if (shape.lambda && !o.l.empty()) {
    for (const auto &l : parse_grid(o.l))
      out.push_back(FamilyParams::with_lambda(l));
  } else if (shape.lambda12 && (!o.l1.empty() || !o.l2.empty())) {
    if (o.l1.empty() || o.l2.empty())
      throw UsageError(to_string(id) + " needs both --l1 and --l2");
    for (const auto &a : parse_grid(o.l1))
      for (const auto &b : parse_grid(o.l2))
        out.push_back(FamilyParams::with_lambdas(a, b));
  } else {
    return default_grid(id);
  }
  for (const auto &p : out)
    if (auto bad = validate_params(id, p))
      throw ConstraintViolation(to_string(id) + ": violates " + *bad + " at " + describe(p));
  return out;
}

void emit(const Options &o, const json &doc) {
  const std::string text = doc.dump(2) + "\n";
  if (!o.out.empty())
    write_atomically(o.out, text);
  if (o.json)
    std::cout << text;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

int cmd_catalog(const Options &o) {
  json rows = json::array();
  for (const auto &f : list_families()) {
    json conds = f.conditions;
    rows.push_back({{"family", to_string(f.id)},
                    {"arity", f.arity},
                    {"class", to_string(f.class_tag)},
                    {"nilradical", f.nilradical},
                    {"conditions", conds}});
  }
  if (o.json || !o.out.empty()) {
    emit(o, {{"schema_version", SCHEMA_VERSION}, {"command", "catalog"}, {"families", rows}});
    if (o.json)
      return EXIT_PASS;
  }
  std::cout << "family  arity  class  nilradical  conditions\n";
  for (const auto &r : rows) {
    std::string conds;
    for (const auto &c : r["conditions"])
      conds += (conds.empty() ? "" : "; ") + c.get<std::string>();
    std::cout << r["family"].get<std::string>()
              << std::string(8 - r["family"].get<std::string>().size(), ' ')
              << r["arity"].get<int>() << "      " << r["class"].get<std::string>()
              << "     " << r["nilradical"].get<std::string>() << "     " << conds << "\n";
  }
  return EXIT_PASS;
}

int cmd_classify(const Options &o) {
  json rows = json::array();
  for (FamilyId id : all_families()) {
    const FoliationType t = classify(id);
    rows.push_back({{"family", to_string(id)},
                    {"manifold", to_string(manifold_of(id))},
                    {"type", to_string(t)},
                    {"cstar", cstar_descriptor(t)}});
  }
  if (!o.out.empty())
    write_atomically(o.out, rows.dump(2) + "\n");
  if (o.json) {
    std::cout << rows.dump(2) << "\n";
    return EXIT_PASS;
  }
  std::map<std::string, int> counts;
  std::cout << "family  manifold  type  C*-algebra\n";
  for (const auto &r : rows) {
    const auto fam = r["family"].get<std::string>();
    std::cout << fam << std::string(8 - fam.size(), ' ') << r["manifold"].get<std::string>()
              << "        " << r["type"].get<std::string>() << "    "
              << r["cstar"].get<std::string>() << "\n";
    ++counts[r["type"].get<std::string>()];
  }
  std::cout << "F1: " << counts["F1"] << ", F2: " << counts["F2"] << ", F3: " << counts["F3"]
            << "\n";
  return EXIT_PASS;
}

int cmd_verify(const Options &o) {
  const auto families = selected_families(o.family);
  const bool single = families.size() == 1;

  std::vector<std::pair<FamilyId, FamilyParams>> tasks;
  for (FamilyId id : families)
    for (const auto &p : grid_for(id, o, single))
      tasks.emplace_back(id, p);

  SuiteConfig cfg;
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  cfg.tol = {o.rank_tol, o.inv_tol, o.flow_tol};

  std::vector<std::future<VerificationReport>> futures;
  for (const auto &[id, p] : tasks)
    futures.push_back(std::async(std::launch::async, [id = id, p = p, cfg] {
      return run_family_suite(id, p, cfg);
    }));

  std::vector<VerificationReport> reports;
  for (auto &f : futures)
    reports.push_back(f.get());

  bool all_passed = true;
  json arr = json::array();
  for (const auto &r : reports) {
    all_passed = all_passed && r.passed();
    arr.push_back(report_json(r));
  }
  emit(o, {{"schema_version", SCHEMA_VERSION},
           {"command", "verify"},
           {"passed", all_passed},
           {"tolerances", {{"rank", o.rank_tol}, {"invariant", o.inv_tol}, {"flow", o.flow_tol}}},
           {"reports", arr}});

  if (!o.json) {
    for (const auto &r : reports) {
      const std::string ps = describe(r.params);
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.family
                << (ps.empty() ? "" : " (" + ps + ")") << "\n";
      for (const auto &c : r.checks)
        if (!c.passed)
          std::cout << "  failed " << c.name << ": residual " << fmt(c.max_residual)
                    << " > " << fmt(c.tolerance) << (c.note.empty() ? "" : "  [" + c.note + "]")
                    << "\n";
      for (const auto &u : r.unsupported)
        std::cout << "  " << u << "\n";
    }
  }
  return all_passed ? EXIT_PASS : EXIT_CHECK_FAILED;
}

int cmd_orbit(const Options &o) {
  const auto id = parse_family(o.family);
  if (!id)
    throw UsageError("orbit needs a single --family");
  FamilyParams p;
  if (!o.l.empty())
    p.lambda = parse_rational(o.l);
  if (!o.l1.empty())
    p.lambda1 = parse_rational(o.l1);
  if (!o.l2.empty())
    p.lambda2 = parse_rational(o.l2);
  if (auto bad = validate_params(*id, p))
    throw ConstraintViolation(to_string(*id) + ": violates " + *bad);

  std::vector<double> vals;
  std::stringstream ss(o.functional);
  std::string item;
  while (std::getline(ss, item, ','))
    vals.push_back(parse_rational(item).convert_to<double>());
  if (vals.size() != 7)
    throw UsageError("--functional needs 7 comma-separated numbers");
  Functional f;
  for (int i = 0; i < 7; ++i)
    f.coords(i) = vals[i];

  const LieAlgebra7 alg = build_family(*id, p);
  const OrbitType type = orbit_type(*id, p, f, o.rank_tol);
  json doc = {{"schema_version", SCHEMA_VERSION},
              {"command", "orbit"},
              {"family", to_string(*id)},
              {"params", params_json(p)},
              {"functional", vec_json(f.coords)},
              {"seed", o.seed},
              {"samples", o.samples},
              {"orbit_type", to_string(type)}};

  int code = EXIT_PASS;
  std::vector<OrbitPoint> pts;
  try {
    pts = sample_orbit(alg, f, o.samples, o.seed);
  } catch (const DomainError &e) {
    doc["error"] = e.what();
    code = EXIT_CHECK_FAILED;
  }
  json jp = json::array();
  for (const auto &g : pts)
    jp.push_back(vec_json(g.coords));
  doc["points"] = jp;

  json inv = nullptr;
  if (invariant_kind(*id) != InvariantKind::None && type == OrbitType::Generic) {
    try {
      const OrbitPoint f0{f.coords};
      const double p0 = invariant(*id, p, f0);
      const int sector = invariant_sector(*id, f0);
      double dev = 0.0;
      std::size_t used = 0, skipped = 0;
      for (const auto &g : pts) {
        try {
          if (invariant_sector(*id, g) != sector) {
            ++skipped;
            continue;
          }
          dev = std::max(dev, std::abs(invariant(*id, p, g) - p0) / (1.0 + std::abs(p0)));
          ++used;
        } catch (const DomainError &) {
          ++skipped;
        }
      }
      inv = {{"value", p0},
             {"max_deviation", dev},
             {"tolerance", o.inv_tol},
             {"evaluated", used},
             {"skipped", skipped}};
      if (dev > o.inv_tol)
        code = EXIT_CHECK_FAILED;
    } catch (const DomainError &e) {
      inv = {{"error", e.what()}};
    }
  }
  doc["invariant"] = inv;

  const std::string text = doc.dump(2) + "\n";
  if (!o.out.empty())
    write_atomically(o.out, text);
  std::cout << text;
  return code;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Coadjoint orbit and foliation checks for the sixteen g_{5,2} extensions"};
  app.require_subcommand(1);

  Options o;
  auto *catalog = app.add_subcommand("catalog", "list the families");
  add_common(catalog, o, false);
  auto *verify = app.add_subcommand("verify", "run the verification suite");
  add_common(verify, o, true);
  auto *classify_cmd = app.add_subcommand("classify", "foliation types and C*-algebras");
  add_common(classify_cmd, o, false);
  auto *orbit = app.add_subcommand("orbit", "sample one coadjoint orbit");
  add_common(orbit, o, true);
  orbit->add_option("--functional", o.functional, "α1,…,α5,α,β")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return EXIT_USAGE;
  }
  if (orbit->parsed() && o.samples == 1000 && orbit->count("--samples") == 0)
    o.samples = 10;

  try {
    if (catalog->parsed())
      return cmd_catalog(o);
    if (classify_cmd->parsed())
      return cmd_classify(o);
    if (verify->parsed())
      return cmd_verify(o);
    return cmd_orbit(o);
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_USAGE;
  } catch (const ConstraintViolation &e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_USAGE;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_CHECK_FAILED;
  }
}
