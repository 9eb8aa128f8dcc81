// Acceptance campaign. Each criterion prints one PASS/FAIL line; detail
// lines for failing sub-checks are indented underneath.

#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gmd/catalog.hpp"
#include "gmd/coadjoint.hpp"
#include "gmd/foliation.hpp"
#include "gmd/lie_core.hpp"
#include "gmd/printed.hpp"
#include "gmd/rng.hpp"
#include "gmd/suite.hpp"
#include "gmd/topology.hpp"

using namespace gmd;

namespace {

constexpr std::uint64_t SEED = 20240601;

struct Outcome {
  bool passed = true;
  std::vector<std::string> details;
  std::string summary;

  void record(const std::string &where, const CheckResult &c) {
    if (c.passed)
      return;
    passed = false;
    std::ostringstream os;
    os << where << " " << c.name << ": residual " << c.max_residual << " > " << c.tolerance;
    if (!c.note.empty())
      os << " [" << c.note << "]";
    details.push_back(os.str());
  }
  void fail(const std::string &why) {
    passed = false;
    details.push_back(why);
  }
};

std::string label(FamilyId id, const FamilyParams &p) {
  const std::string d = describe(p);
  return to_string(id) + (d.empty() ? "" : "(" + d + ")");
}

Rational random_rational(CounterRng &rng) {
  const long long num = rng.integer(-20, 20);
  const long long den = rng.integer(1, 10);
  return Rational(num, den);
}

FamilyParams random_params(FamilyId id, CounterRng &rng) {
  const ParamShape shape = param_shape(id);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    FamilyParams p;
    if (shape.lambda) {
      p.lambda = id == FamilyId::G1 ? Rational(rng.integer(0, 1)) : random_rational(rng);
    } else if (shape.lambda12) {
      p.lambda1 = random_rational(rng);
      p.lambda2 = random_rational(rng);
    }
    if (!validate_params(id, p))
      return p;
  }
  throw std::runtime_error("no valid parameter draw for " + to_string(id));
}

Outcome c1_jacobi() {
  Outcome o;
  std::size_t draws = 0;
  for (FamilyId id : all_families()) {
    CounterRng rng(SEED, {tag("c1"), static_cast<std::uint64_t>(id)});
    for (int k = 0; k < 100; ++k) {
      const FamilyParams p = random_params(id, rng);
      const JacobiReport rep = verify_jacobi(build_family(id, p));
      ++draws;
      if (!rep.ok())
        o.fail(label(id, p) + ": " + std::to_string(rep.violations.size()) +
               " nonzero cyclic sums");
    }
  }
  o.summary = std::to_string(draws) + " algebras, exact rational arithmetic";
  return o;
}

Outcome c2_golden() {
  Outcome o;
  int families = 0;
  for (FamilyId id : all_families()) {
    if (!has_printed_kirillov(id))
      continue;
    ++families;
    for (const auto &p : default_grid(id))
      o.record(label(id, p), golden_kirillov_check(id, p));
  }
  o.summary = std::to_string(families) + " printed matrices, coefficient-exact";
  return o;
}

Outcome c3_max_rank() {
  Outcome o;
  for (FamilyId id : all_families())
    for (const auto &p : default_grid(id))
      o.record(label(id, p), max_rank_check(id, p, 10000, SEED, DEFAULT_RANK_TOL));
  o.summary = "10^4 functionals per family and parameter";
  return o;
}

Outcome c4_predicates() {
  Outcome o;
  for (FamilyId id : all_families()) {
    if (!has_rank_condition(id))
      continue;
    for (const auto &p : default_grid(id))
      o.record(label(id, p), predicate_agreement_check(id, p, 10000, SEED, DEFAULT_RANK_TOL));
  }
  o.summary = "10^4 samples per family incl. boundary probes";
  return o;
}

Outcome c5_printed_exp() {
  Outcome o;
  for (FamilyId id : all_families()) {
    if (!has_printed_exp(id))
      continue;
    for (const auto &p : default_grid(id))
      o.record(label(id, p), printed_exp_check(id, p, 100, SEED));
  }
  o.summary = "G4, G12, G13, 100 elements of radius 1.5, relative 1e-10";
  return o;
}

Outcome c6_invariants() {
  Outcome o;
  const std::vector<FamilyId> fams = {FamilyId::G4,  FamilyId::G12, FamilyId::G13,
                                      FamilyId::G1,  FamilyId::G7,  FamilyId::G8,
                                      FamilyId::G11, FamilyId::G14, FamilyId::G15,
                                      FamilyId::G16};
  for (FamilyId id : fams)
    for (const auto &p : default_grid(id))
      o.record(label(id, p), invariant_constancy(id, p, 50, 200, SEED, 1e-7));
  o.summary = "50 functionals x 200 group elements, 1e-7 relative";
  return o;
}

Outcome c7_foliation() {
  Outcome o;
  for (FamilyId id : all_families()) {
    if (!has_system(id))
      continue;
    for (const auto &p : default_grid(id)) {
      o.record(label(id, p), distribution_check(id, p, 1000, SEED, DEFAULT_RANK_TOL));
      o.record(label(id, p), involutivity_check(id, p, 1000, SEED));
    }
  }
  o.summary = "10^3 generic points per family, rank tol 1e-9, involutivity 1e-9";
  return o;
}

Outcome c8_measure() {
  Outcome o;
  for (FamilyId id : all_families())
    for (const auto &p : default_grid(id))
      o.record(label(id, p), jacobian_campaign(id, p, 1000, SEED));
  o.summary = "det = exp(tr ad_U), 10^3 elements per family, relative 1e-10";
  return o;
}

Outcome c9_flows() {
  Outcome o;
  for (FamilyId id : all_families()) {
    if (!has_closed_flow(id))
      continue;
    for (const auto &p : default_grid(id))
      o.record(label(id, p), flow_rk4_check(id, p, 100, SEED, 1e-6));
  }
  o.summary = "closed form vs RK4 on t in [-1,1], 100 starts, 1e-6";
  return o;
}

FamilyId target_of(HMap h) {
  static const std::map<HMap, FamilyId> table = {
      {HMap::h1, FamilyId::G1},   {HMap::h2, FamilyId::G4},   {HMap::h3, FamilyId::G7},
      {HMap::h4, FamilyId::G8},   {HMap::h5, FamilyId::G11},  {HMap::h6, FamilyId::G6},
      {HMap::h7, FamilyId::G12},  {HMap::h8, FamilyId::G13},  {HMap::h9, FamilyId::G14},
      {HMap::h10, FamilyId::G15}, {HMap::h11, FamilyId::G16}};
  return table.at(h);
}

Outcome c10_topology() {
  Outcome o;
  std::map<FoliationType, int> counts;
  for (FamilyId id : all_families())
    ++counts[classify(id)];
  if (counts[FoliationType::F1] != 11 || counts[FoliationType::F2] != 1 ||
      counts[FoliationType::F3] != 4)
    o.fail("classification counts " + std::to_string(counts[FoliationType::F1]) + "/" +
           std::to_string(counts[FoliationType::F2]) + "/" +
           std::to_string(counts[FoliationType::F3]));

  std::vector<std::string> findings;
  for (HMap hm : all_hmaps()) {
    const FamilyId target = target_of(hm);
    for (const auto &p : default_grid(target)) {
      const Homeomorphism h = make_homeomorphism(hm, p);
      const std::string where = to_string(hm) + "->" + label(target, p);
      o.record(where, round_trip_check(h, 1000, SEED));
      if (hm == HMap::h6)
        continue;
      const CheckResult leaf = verify_leaf_map(h, 50, SEED, 200);
      if (!leaf.passed && (hm == HMap::h10 || hm == HMap::h11)) {
        std::ostringstream os;
        os << "finding " << where << " " << leaf.name << ": residual " << leaf.max_residual;
        findings.push_back(os.str());
        continue;
      }
      o.record(where, leaf);
    }
  }
  for (FoliationType t : {FoliationType::F1, FoliationType::F2, FoliationType::F3})
    o.record("type", fibration_check(t, 1000, SEED));
  for (const auto &f : findings)
    o.details.push_back(f);
  o.summary = "types 11/1/4, eleven homeomorphisms, fibrations";
  return o;
}

Outcome c11_discontinuity() {
  Outcome o;
  const FamilyId id = FamilyId::G4;
  const FamilyParams p = FamilyParams::with_lambdas(0, 2);
  const auto make = [](double eps) {
    Functional f;
    f.coords << 0.3, 0.7, -0.4, eps, 1.2, 0.5, -0.8;
    return f;
  };
  double bound = 0.0;
  for (double eps : {1e-1, 1e-2, 1e-4, 1e-6, 1e-8, 1e-10, -1e-3, -1e-7}) {
    const Functional f = make(eps);
    const OrbitType t = orbit_type(id, p, f);
    if (t != OrbitType::Generic)
      o.fail("eps=" + std::to_string(eps) + " classified " + to_string(t));
    const double v = invariant(id, p, OrbitPoint{f.coords});
    if (!std::isfinite(v))
      o.fail("invariant not finite at eps=" + std::to_string(eps));
    bound = std::max(bound, std::abs(v));
  }
  const OrbitType t0 = orbit_type(id, p, make(0.0));
  if (t0 != OrbitType::Type1MaxNonGeneric)
    o.fail(std::string("eps=0 classified ") + to_string(t0));
  if (!(bound < 10.0))
    o.fail("invariant not bounded, max |p| = " + std::to_string(bound));
  o.summary = "G4(λ1=0, λ2=2), max |p(F_eps)| = " + std::to_string(bound);
  return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>> &criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> list = {
      {"Jacobi identity", c1_jacobi},
      {"Kirillov forms match printed matrices", c2_golden},
      {"maximal orbit dimension is six", c3_max_rank},
      {"rank conditions agree with numeric rank", c4_predicates},
      {"printed exp(ad U) entries", c5_printed_exp},
      {"orbit invariants are constant", c6_invariants},
      {"differential systems generate the foliation", c7_foliation},
      {"coadjoint action scales Lebesgue measure", c8_measure},
      {"closed-form flows agree with integration", c9_flows},
      {"topological classification", c10_topology},
      {"orbit type jumps while the invariant stays bounded", c11_discontinuity},
  };
  return list;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"acceptance campaign"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-11)")->check(CLI::Range(1, 11));
  CLI11_PARSE(app, argc, argv);

  bool all_passed = true;
  const auto &list = criteria();
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (only != 0 && static_cast<int>(i + 1) != only)
      continue;
    Outcome out;
    try {
      out = list[i].second();
    } catch (const std::exception &e) {
      out.fail(std::string("exception: ") + e.what());
    }
    all_passed = all_passed && out.passed;
    std::cout << (out.passed ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
              << list[i].first;
    if (!out.summary.empty())
      std::cout << " (" << out.summary << ")";
    std::cout << "\n";
    const std::size_t shown = std::min<std::size_t>(out.details.size(), 25);
    for (std::size_t k = 0; k < shown; ++k)
      std::cout << "    " << out.details[k] << "\n";
    if (out.details.size() > shown)
      std::cout << "    ... " << out.details.size() - shown << " more\n";
  }
  return all_passed ? 0 : 1;
}
