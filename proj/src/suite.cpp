#include "gmd/suite.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "gmd/coadjoint.hpp"
#include "gmd/errors.hpp"
#include "gmd/foliation.hpp"
#include "gmd/printed.hpp"
#include "gmd/rng.hpp"
#include "gmd/topology.hpp"

namespace gmd {

namespace {

std::uint64_t key(std::uint64_t seed, FamilyId id, const char *check) {
  return splitmix64(seed ^ tag(check)) ^ (static_cast<std::uint64_t>(id) << 56);
}

Functional uniform_functional(CounterRng &rng) {
  Functional f;
  for (int i = 0; i < DIM; ++i)
    f.coords(i) = rng.uniform(-2.0, 2.0);
  return f;
}

// A point of V_G with rank-6 Kirillov form.
OrbitPoint generic_point(FamilyId id, const LieAlgebra7 &alg, std::uint64_t s,
                         std::uint64_t k, double tol) {
  const FoliatedManifold m = manifold_of(id);
  for (std::uint64_t attempt = 0;; ++attempt) {
    const OrbitPoint v = sample_manifold_point(m, s, k * 1000 + attempt);
    if (numeric_rank(kirillov_form(alg, v.as_functional()), tol) == 6)
      return v;
  }
}

double rel(const Vec7 &a, const Vec7 &b) {
  return (a - b).cwiseAbs().maxCoeff() / std::max(1.0, b.cwiseAbs().maxCoeff());
}

std::optional<HMap> leaf_map_into(FamilyId id) {
  switch (id) {
  case FamilyId::G1:
    return HMap::h1;
  case FamilyId::G4:
    return HMap::h2;
  case FamilyId::G7:
    return HMap::h3;
  case FamilyId::G8:
    return HMap::h4;
  case FamilyId::G11:
    return HMap::h5;
  case FamilyId::G5:
  case FamilyId::G6:
    return HMap::h6;
  case FamilyId::G12:
    return HMap::h7;
  case FamilyId::G13:
    return HMap::h8;
  case FamilyId::G14:
    return HMap::h9;
  case FamilyId::G15:
    return HMap::h10;
  case FamilyId::G16:
    return HMap::h11;
  default:
    return std::nullopt;
  }
}

} // namespace

CheckResult jacobi_check(FamilyId id, const FamilyParams &p) {
  CheckBuilder cb("jacobi", 0.0);
  const JacobiReport rep = verify_jacobi(build_family(id, p));
  cb.add(rep.max_residual.convert_to<double>());
  for (const auto &t : rep.violations) {
    std::ostringstream os;
    os << "violated at (" << basis_labels[t[0]] << "," << basis_labels[t[1]] << ","
       << basis_labels[t[2]] << ")";
    cb.note(os.str());
  }
  return cb.finish();
}

CheckResult max_rank_check(FamilyId id, const FamilyParams &p, std::size_t n,
                           std::uint64_t seed, double tol) {
  const LieAlgebra7 alg = build_family(id, p);
  CheckBuilder cb("max_rank_six", 0.0);
  const std::uint64_t s = key(seed, id, "max-rank");
  std::size_t six = 0, bad = 0;
  for (std::size_t k = 0; k < n; ++k) {
    CounterRng rng(s, {k});
    const Functional f = uniform_functional(rng);
    const int r = numeric_rank(kirillov_form(alg, f), tol);
    const bool wrong = r > 6 || r % 2 != 0;
    bad += wrong;
    six += (r == 6);
    cb.add(wrong ? 1.0 : 0.0, f.coords);
  }
  if (six == 0) {
    cb.add(1.0);
    cb.note("no functional of rank 6");
  }
  cb.note(std::to_string(six) + " of " + std::to_string(n) + " functionals have rank 6");
  if (bad)
    cb.note(std::to_string(bad) + " functionals with rank 7 or odd rank");
  return cb.finish();
}

CheckResult predicate_agreement_check(FamilyId id, const FamilyParams &p, std::size_t n,
                                      std::uint64_t seed, double tol) {
  const LieAlgebra7 alg = build_family(id, p);
  const std::uint64_t s = key(seed, id, "predicate");
  static const char *probe_names[5] = {"random", "α4=0", "α5=0", "α3=α5=0", "α4=α5=0"};
  std::array<std::size_t, 5> disagree{};
  std::array<std::optional<Vec7>, 5> first{};
  std::size_t total = 0;

  for (std::size_t k = 0; k < n; ++k) {
    CounterRng rng(s, {k});
    Functional f;
    // Keep every coordinate away from zero so products in the printed
    // conditions stay clear of their boundaries.
    for (int i = 0; i < DIM; ++i) {
      const double mag = rng.uniform(0.25, 2.0);
      f.coords(i) = rng.uniform() < 0.5 ? -mag : mag;
    }
    const int probe = static_cast<int>(k % 5);
    if (probe == 1 || probe == 4)
      f.coords(X4) = 0.0;
    if (probe == 2 || probe == 3 || probe == 4)
      f.coords(X5) = 0.0;
    if (probe == 3)
      f.coords(X3) = 0.0;

    const bool printed = rank_condition(id, p, f);
    const bool numeric = numeric_rank(kirillov_form(alg, f), tol) == 6;
    const bool differ = printed != numeric;
    if (differ) {
      ++disagree[probe];
      if (!first[probe])
        first[probe] = f.coords;
    }
    ++total;
  }
  // Residual is the number of disagreements.
  CheckResult r;
  r.name = "rank_predicate_agreement";
  r.tolerance = 0.0;
  r.n_evaluated = total;
  std::size_t bad = 0;
  for (int q = 0; q < 5; ++q) {
    bad += disagree[q];
    if (!disagree[q])
      continue;
    if (!r.worst_sample)
      r.worst_sample = first[q];
    if (!r.note.empty())
      r.note += "; ";
    r.note += std::string(probe_names[q]) + ": " + std::to_string(disagree[q]) +
              " disagreements, e.g. F=" + format_vec(*first[q]);
  }
  r.max_residual = static_cast<double>(bad);
  r.passed = bad == 0 && total > 0;
  return r;
}

CheckResult orbit_rank_constancy_check(FamilyId id, const FamilyParams &p, std::size_t nf,
                                       std::size_t ng, std::uint64_t seed, double tol) {
  const LieAlgebra7 alg = build_family(id, p);
  CheckBuilder cb("orbit_rank_constancy", 0.0);
  const std::uint64_t s = key(seed, id, "orbit-rank");
  std::size_t bad = 0;
  for (std::size_t i = 0; i < nf; ++i) {
    CounterRng rng(s, {i});
    const Functional f = uniform_functional(rng);
    const int r0 = numeric_rank(kirillov_form(alg, f), tol);
    try {
      for (const OrbitPoint &g : sample_orbit(alg, f, ng, s + i + 1)) {
        const bool differ = numeric_rank(kirillov_form(alg, g.as_functional()), tol) != r0;
        bad += differ;
        cb.add(differ ? 1.0 : 0.0, g.coords);
      }
    } catch (const DomainError &e) {
      cb.fail(f.coords, e.what());
    }
  }
  if (bad)
    cb.note(std::to_string(bad) + " orbit points with a different rank");
  return cb.finish();
}

CheckResult distribution_check(FamilyId id, const FamilyParams &p, std::size_t n,
                               std::uint64_t seed, double tol) {
  const LieAlgebra7 alg = build_family(id, p);
  CheckBuilder cb("distribution_equivalence", 0.0);
  const std::uint64_t s = key(seed, id, "distribution");
  for (std::size_t k = 0; k < n; ++k) {
    const OrbitPoint v = generic_point(id, alg, s, k, tol);
    cb.add(distribution_equiv(id, p, v, tol) ? 0.0 : 1.0, v.coords);
  }
  return cb.finish();
}

CheckResult involutivity_check(FamilyId id, const FamilyParams &p, std::size_t n,
                               std::uint64_t seed) {
  const LieAlgebra7 alg = build_family(id, p);
  CheckBuilder cb("involutivity", 1e-9);
  // Same points as the distribution check.
  const std::uint64_t s = key(seed, id, "distribution");
  for (std::size_t k = 0; k < n; ++k) {
    const OrbitPoint v = generic_point(id, alg, s, k, DEFAULT_RANK_TOL);
    cb.add(involutivity_residual(id, p, v), v.coords);
  }
  return cb.finish();
}

CheckResult annihilation_check(FamilyId id, const FamilyParams &p, std::size_t n,
                               std::uint64_t seed) {
  const LieAlgebra7 alg = build_family(id, p);
  CheckBuilder cb("invariant_annihilation", 1e-6);
  const std::uint64_t s = key(seed, id, "annihilation");
  for (std::size_t k = 0; k < n; ++k) {
    const OrbitPoint v = generic_point(id, alg, s, k, DEFAULT_RANK_TOL);
    try {
      const double scale = 1.0 + std::abs(invariant(id, p, v));
      const double r = has_system(id) ? annihilation_residual(id, p, v)
                                      : annihilation_residual_orbit(id, p, v);
      cb.add(r / scale, v.coords);
    } catch (const DomainError &) {
      cb.skip();
    }
  }
  return cb.finish();
}

CheckResult jacobian_campaign(FamilyId id, const FamilyParams &p, std::size_t n,
                              std::uint64_t seed) {
  const LieAlgebra7 alg = build_family(id, p);
  CheckBuilder cb("jacobian_determinant", 1e-10);
  const std::uint64_t s = key(seed, id, "jacobian");
  for (std::size_t k = 0; k < n; ++k) {
    const AlgebraElement u = sample_element(s, k, 1.5);
    try {
      const JacobianCheck j = jacobian_check(alg, u);
      cb.add(std::abs(j.det_of_action - j.exp_trace) / j.exp_trace, u.coords);
    } catch (const DomainError &e) {
      cb.fail(u.coords, e.what());
    }
  }
  return cb.finish();
}

CheckResult flow_field_check(FamilyId id, const FamilyParams &p, std::size_t n,
                             std::uint64_t seed) {
  const LieAlgebra7 alg = build_family(id, p);
  const DifferentialSystem sys = system_fields(id, p);
  CheckBuilder cb("flow_field_consistency", 1e-5);
  const std::uint64_t s = key(seed, id, "flow-field");
  const double h = 1e-4;
  for (std::size_t k = 0; k < n; ++k) {
    const OrbitPoint v = generic_point(id, alg, s, k, DEFAULT_RANK_TOL);
    CounterRng rng(s, {k, 7});
    const double t = rng.uniform(-1.0, 1.0);
    for (int idx = 1; idx <= 6; ++idx) {
      const Vec7 fd = (flow_closed(id, p, idx, t + h, v).coords -
                       flow_closed(id, p, idx, t - h, v).coords) /
                      (2.0 * h);
      const Vec7 field = sys.fields[idx - 1](flow_closed(id, p, idx, t, v).coords);
      cb.add(rel(fd, field), v.coords);
    }
  }
  return cb.finish();
}

CheckResult flow_rk4_check(FamilyId id, const FamilyParams &p, std::size_t n,
                           std::uint64_t seed, double tol) {
  const LieAlgebra7 alg = build_family(id, p);
  const DifferentialSystem sys = system_fields(id, p);
  CheckBuilder cb("flow_rk4_agreement", tol);
  const std::uint64_t s = key(seed, id, "flow-rk4");
  for (std::size_t k = 0; k < n; ++k) {
    const OrbitPoint v = generic_point(id, alg, s, k, DEFAULT_RANK_TOL);
    CounterRng rng(s, {k, 11});
    const double t = rng.uniform(-1.0, 1.0);
    for (int idx = 1; idx <= 6; ++idx) {
      const Vec7 closed = flow_closed(id, p, idx, t, v).coords;
      const Vec7 numeric = flow_numeric(sys.fields[idx - 1], t, v, 1000).coords;
      cb.add(rel(numeric, closed), v.coords);
    }
  }
  return cb.finish();
}

CheckResult composition_check(const FamilyParams &p, std::size_t n, std::uint64_t seed) {
  const FamilyId id = FamilyId::G4;
  const LieAlgebra7 alg = build_family(id, p);
  CheckBuilder cb("flow_composition", 1e-9);
  const std::uint64_t s = key(seed, id, "composition");
  const double l1 = p.l1(), l2 = p.l2();
  for (std::size_t k = 0; k < n; ++k) {
    const Functional f = sample_generic_functional(id, p, s, k);
    const OrbitPoint target = coadjoint_act(alg, sample_element(s, k, 1.5), f);
    const Vec7 &a = f.coords, &tc = target.coords;

    // x + y and (1+λ1)x + λ2 y from the x4, x5 coordinates.
    const double s4 = std::log(tc(X4) / a(X4)), s5 = std::log(tc(X5) / a(X5));
    const double x = (s5 - l2 * s4) / (1.0 + l1 - l2), y = s4 - x;

    OrbitPoint q = flow_closed(id, p, 1, tc(X1) - a(X1), {a});
    q = flow_closed(id, p, 2, x, q);
    q = flow_closed(id, p, 3, y, q);
    const double x1 = (tc(X2) - q.coords(X2)) / q.coords(X4);
    q = flow_closed(id, p, 4, x1, q);
    q = flow_closed(id, p, 5, tc(XX) - a(XX), q);
    q = flow_closed(id, p, 6, tc(YY) - a(YY), q);
    cb.add(rel(q.coords, tc), a);
  }
  return cb.finish();
}

CheckResult component_preservation_check(FamilyId id, const FamilyParams &p,
                                         std::size_t n, std::uint64_t seed) {
  const LieAlgebra7 alg = build_family(id, p);
  CheckBuilder cb("component_preservation", 0.0);
  const std::uint64_t s = key(seed, id, "components");
  for (std::size_t k = 0; k < n; ++k) {
    const OrbitPoint v = generic_point(id, alg, s, k, DEFAULT_RANK_TOL);
    const std::string c0 = component_of(v, FoliatedManifold::V1);
    for (const OrbitPoint &g : sample_orbit(alg, v.as_functional(), 20, s + k + 1)) {
      const bool same = in_manifold(g, FoliatedManifold::V1) &&
                        component_of(g, FoliatedManifold::V1) == c0;
      cb.add(same ? 0.0 : 1.0, g.coords);
    }
  }
  return cb.finish();
}

std::vector<FamilyParams> default_grid(FamilyId id) {
  static const Rational probes[4] = {0, Rational(1, 2), 1, 2};
  std::vector<FamilyParams> out;
  const ParamShape shape = param_shape(id);
  if (shape.lambda) {
    for (const auto &l : probes)
      if (!validate_params(id, FamilyParams::with_lambda(l)))
        out.push_back(FamilyParams::with_lambda(l));
  } else if (shape.lambda12) {
    for (const auto &l1 : probes)
      for (const auto &l2 : probes)
        if (!validate_params(id, FamilyParams::with_lambdas(l1, l2)))
          out.push_back(FamilyParams::with_lambdas(l1, l2));
  } else {
    out.push_back({});
  }
  return out;
}

VerificationReport run_family_suite(FamilyId id, const FamilyParams &p,
                                    const SuiteConfig &cfg) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.family = to_string(id);
  rep.params = p;
  rep.seed = cfg.seed;
  rep.samples = cfg.samples;

  const std::size_t n = cfg.samples;
  const std::size_t nf = std::min<std::size_t>(n, 50);
  const std::uint64_t seed = cfg.seed;
  auto run = [&](auto &&fn) {
    try {
      rep.checks.push_back(fn());
    } catch (const std::exception &e) {
      CheckResult r;
      r.name = "error";
      r.passed = false;
      r.note = e.what();
      rep.checks.push_back(r);
    }
  };

  run([&] { return jacobi_check(id, p); });
  if (has_printed_kirillov(id))
    run([&] { return golden_kirillov_check(id, p); });
  run([&] { return max_rank_check(id, p, n, seed, cfg.tol.rank); });
  if (has_rank_condition(id))
    run([&] { return predicate_agreement_check(id, p, n, seed, cfg.tol.rank); });
  else
    rep.unsupported.push_back("rank_predicate_agreement: unsupported ([t-v])");
  run([&] { return orbit_rank_constancy_check(id, p, nf, 20, seed, cfg.tol.rank); });
  run([&] { return jacobian_campaign(id, p, n, seed); });

  if (has_system(id)) {
    run([&] { return distribution_check(id, p, n, seed, cfg.tol.rank); });
    run([&] { return involutivity_check(id, p, n, seed); });
  } else {
    rep.unsupported.push_back("distribution_equivalence: unsupported ([t-v])");
    rep.unsupported.push_back("involutivity: unsupported ([t-v])");
  }

  if (invariant_kind(id) != InvariantKind::None) {
    run([&] {
      CheckResult r = invariant_constancy(id, p, nf, 200, key(seed, id, "constancy"),
                                          cfg.tol.invariant);
      if (invariant_kind(id) == InvariantKind::Derived)
        r.note = "derived invariant" + (r.note.empty() ? "" : "; " + r.note);
      return r;
    });
    run([&] { return annihilation_check(id, p, std::min<std::size_t>(n, 200), seed); });
  } else {
    rep.unsupported.push_back("invariant_constancy: no invariant available");
  }

  if (has_closed_flow(id)) {
    const std::size_t nflow = std::min<std::size_t>(n, 100);
    run([&] { return flow_field_check(id, p, nflow, seed); });
    run([&] { return flow_rk4_check(id, p, nflow, seed, cfg.tol.flow); });
  }
  if (id == FamilyId::G4)
    run([&] { return composition_check(p, std::min<std::size_t>(n, 100), seed); });
  if (id == FamilyId::G2 || id == FamilyId::G4)
    run([&] { return component_preservation_check(id, p, nf, seed); });
  if (has_printed_exp(id)) {
    run([&] { return printed_exp_check(id, p, std::min<std::size_t>(n, 100), seed); });
    run([&] { return printed_coordinates_check(id, p, std::min<std::size_t>(n, 100), seed); });
  }

  if (auto hm = leaf_map_into(id)) {
    const FamilyParams tp = *hm == HMap::h6 ? FamilyParams{} : p;
    const Homeomorphism h = make_homeomorphism(*hm, tp);
    const std::size_t nh = std::min<std::size_t>(n, 1000);
    run([&] { return round_trip_check(h, nh, seed); });
    if (*hm != HMap::h6)
      run([&] { return verify_leaf_map(h, *hm == HMap::h2 || *hm == HMap::h7 ||
                                                  *hm == HMap::h8
                                              ? nh
                                              : nf,
                                       seed); });
    if (*hm == HMap::h6) {
      Homeomorphism h6 = h;
      h6.params = p;
      run([&] { return tangent_map_check(h6, id, std::min<std::size_t>(n, 200), seed); });
    }
  }

  rep.wall_time_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return rep;
}

} // namespace gmd
