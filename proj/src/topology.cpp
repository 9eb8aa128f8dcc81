#include "gmd/topology.hpp"

#include <cmath>

#include "gmd/errors.hpp"
#include "gmd/foliation.hpp"
#include "gmd/rng.hpp"

namespace gmd {

namespace {

double lnabs(double x) { return std::log(std::abs(x)); }

void require(bool ok, const Homeomorphism &h, const char *what) {
  if (!ok)
    throw DomainError(to_string(h.id) + ": " + what);
}

// Branch selector shared by h8..h11.
enum class Branch { Main, X4Zero, X5Zero };

Branch branch_of(const Homeomorphism &h, double x4, double x5) {
  require(x4 != 0.0 || x5 != 0.0, h, "point outside V3");
  if (x4 != 0.0 && x5 != 0.0)
    return Branch::Main;
  return x4 == 0.0 ? Branch::X4Zero : Branch::X5Zero;
}

// Forward when dir = +1, inverse when dir = -1. Every map keeps x1, x4, x5,
// x, y except h1.
Vec7 transform(const Homeomorphism &h, const Vec7 &v, int dir) {
  Vec7 w = v;
  const double x2 = v(X2), x3 = v(X3), x4 = v(X4), x5 = v(X5);
  const double l = h.params.l(), l1 = h.params.l1(), l2 = h.params.l2();
  const bool fwd = dir > 0;

  switch (h.id) {
  case HMap::h1:
    if (fwd) {
      require(x4 * x5 != 0.0, h, "point outside V1");
      w(X4) = x2 - x3 * x4 / x5;
    } else {
      require(x5 != 0.0 && x3 != 0.0, h, "inverse needs x3 x5 != 0");
      w(X4) = (x2 - x4) * x5 / x3;
    }
    break;
  case HMap::h2: {
    require(x4 * x5 != 0.0, h, "point outside V1");
    const double m = l2 - l1 - 1.0;
    const double s = std::pow(std::abs(x5), 1.0 / m) / std::pow(std::abs(x4), (1.0 + l1) / m);
    w(X2) = fwd ? x2 * s : x2 / s;
    w(X3) = fwd ? x3 * s : x3 / s;
    break;
  }
  case HMap::h3:
    require(x4 * x5 != 0.0, h, "point outside V1");
    if (fwd) {
      w(X2) = (x2 + lnabs(x4)) * x5;
      w(X3) = (x3 + x5 * lnabs(x5) / x4) * x5;
    } else {
      w(X2) = x2 / x5 - lnabs(x4);
      w(X3) = x3 / x5 - x5 * lnabs(x5) / x4;
    }
    break;
  case HMap::h4:
    require(x4 * x5 != 0.0, h, "point outside V1");
    if (fwd) {
      w(X2) = (x2 - (1 + l) * lnabs(x4)) * x5;
      w(X3) = (x3 - (2 + l) * x5 * lnabs(x5) / x4) * x5;
    } else {
      w(X2) = x2 / x5 + (1 + l) * lnabs(x4);
      w(X3) = x3 / x5 + (2 + l) * x5 * lnabs(x5) / x4;
    }
    break;
  case HMap::h5: {
    require(x4 * x5 != 0.0, h, "point outside V1");
    const double k = x5 / std::exp(x4 / x5);
    w(X2) = fwd ? x2 * k : x2 / k;
    w(X3) = fwd ? x3 * k : x3 / k;
    break;
  }
  case HMap::h6: {
    require(x4 * x5 != 0.0, h, "point outside V1");
    const double k = std::sqrt(std::abs(x4));
    w(X2) = fwd ? x2 / k : x2 * k;
    w(X3) = fwd ? x3 / k : x3 * k;
    break;
  }
  case HMap::h7: {
    require(x5 != 0.0, h, "point outside V2");
    const double k = std::pow(std::abs(x5), l / (1 + l)) / std::exp(l * x4 / ((1 + l) * x5));
    w(X2) = fwd ? x2 * k : x2 / k;
    w(X3) = fwd ? x3 * k : x3 / k;
    break;
  }
  case HMap::h8:
    if (branch_of(h, x4, x5) == Branch::Main) {
      const double k = std::exp(l * std::atan(x4 / x5));
      w(X2) = fwd ? x2 / k : x2 * k;
      w(X3) = fwd ? x3 / k : x3 * k;
    }
    break;
  case HMap::h9: {
    const Branch br = branch_of(h, x4, x5);
    const double c = std::pow(x4 * x4 + x5 * x5, 1.0 / (1.0 + l1));
    if (br == Branch::Main) {
      // The printed x3 factor reads e^{λb}; λ2 is the only λ of this family.
      const double k = c * std::exp(l2 * std::atan(x5 / x4));
      w(X2) = fwd ? x2 / k : x2 * k;
      w(X3) = fwd ? x3 / k : x3 * k;
    } else if (br == Branch::X4Zero) {
      w(X2) = fwd ? x2 / c : x2 * c;
    } else {
      w(X3) = fwd ? x3 / c : x3 * c;
    }
    break;
  }
  case HMap::h10: {
    const Branch br = branch_of(h, x4, x5);
    if (br == Branch::Main) {
      const double r2 = x4 * x4 + x5 * x5;
      w(X2) = x2 + dir * r2 * std::log(r2) / (2.0 * x5);
    } else if (br == Branch::X4Zero) {
      w(X2) = x2 + dir * x5 * lnabs(x5);
    } else {
      w(X3) = x3 - dir * x4 * lnabs(x4);
    }
    break;
  }
  case HMap::h11: {
    const Branch br = branch_of(h, x4, x5);
    if (br == Branch::Main) {
      const double r2 = x4 * x4 + x5 * x5;
      const double shift = (x4 + std::atan(x5 / x4)) / 2.0 + l * r2 * std::log(r2) / (2.0 * x4);
      w(X2) = x2 + dir * shift;
    } else if (br == Branch::X4Zero) {
      w(X2) = x2 + dir * l * x5 * lnabs(x5);
    } else {
      w(X3) = x3 - dir * l * x4 * lnabs(x4);
    }
    break;
  }
  }
  if (!w.allFinite())
    throw DomainError(to_string(h.id) + ": non-finite image");
  return w;
}

FamilyParams lambda0() { return FamilyParams::with_lambda(0); }

OrbitPoint random_point(std::uint64_t seed, std::uint64_t index, std::uint64_t attempt) {
  CounterRng rng(seed, {tag("manifold-point"), index, attempt});
  OrbitPoint v;
  for (int i = 0; i < DIM; ++i)
    v.coords(i) = rng.uniform(-2.0, 2.0);
  return v;
}

} // namespace

const char *to_string(FoliatedManifold m) {
  switch (m) {
  case FoliatedManifold::V1:
    return "V1";
  case FoliatedManifold::V2:
    return "V2";
  case FoliatedManifold::V3:
    return "V3";
  }
  return "?";
}

FoliatedManifold manifold_of(FamilyId id) {
  if (class_of(id) == ClassTag::A2)
    return FoliatedManifold::V3;
  return id == FamilyId::G12 ? FoliatedManifold::V2 : FoliatedManifold::V1;
}

bool in_manifold(const OrbitPoint &v, FoliatedManifold m) {
  const double x4 = v.coords(X4), x5 = v.coords(X5);
  switch (m) {
  case FoliatedManifold::V1:
    return x4 != 0.0 && x5 != 0.0;
  case FoliatedManifold::V2:
    return x5 != 0.0;
  case FoliatedManifold::V3:
    return x4 != 0.0 || x5 != 0.0;
  }
  return false;
}

int component_count(FoliatedManifold m) {
  switch (m) {
  case FoliatedManifold::V1:
    return 4;
  case FoliatedManifold::V2:
    return 2;
  default:
    return 1;
  }
}

std::string component_of(const OrbitPoint &v, FoliatedManifold m) {
  if (!in_manifold(v, m))
    throw DomainError(std::string("point outside ") + to_string(m));
  auto sign = [](double x) { return x > 0 ? std::string("+") : std::string("-"); };
  switch (m) {
  case FoliatedManifold::V1:
    return sign(v.coords(X4)) + sign(v.coords(X5));
  case FoliatedManifold::V2:
    return sign(v.coords(X5));
  default:
    return "single";
  }
}

const char *to_string(FoliationType t) {
  switch (t) {
  case FoliationType::F1:
    return "F1";
  case FoliationType::F2:
    return "F2";
  case FoliationType::F3:
    return "F3";
  }
  return "?";
}

FoliationType classify(FamilyId id) {
  switch (manifold_of(id)) {
  case FoliatedManifold::V1:
    return FoliationType::F1;
  case FoliatedManifold::V2:
    return FoliationType::F2;
  default:
    return FoliationType::F3;
  }
}

FoliatedManifold manifold_for(FoliationType t) {
  switch (t) {
  case FoliationType::F1:
    return FoliatedManifold::V1;
  case FoliationType::F2:
    return FoliatedManifold::V2;
  default:
    return FoliatedManifold::V3;
  }
}

std::string cstar_descriptor(FoliationType t) {
  switch (t) {
  case FoliationType::F1:
    return "(C0(R)^⊕4) ⊗ K";
  case FoliationType::F2:
    return "(C0(R)^⊕2) ⊗ K";
  default:
    return "C0(R) ⊗ K";
  }
}

std::string to_string(HMap h) { return "h" + std::to_string(static_cast<int>(h)); }

std::vector<HMap> all_hmaps() {
  std::vector<HMap> v;
  for (int i = 1; i <= 11; ++i)
    v.push_back(static_cast<HMap>(i));
  return v;
}

Homeomorphism make_homeomorphism(HMap h, const FamilyParams &tp) {
  Homeomorphism m{h, tp, FamilyId::G2, {}, {}, FoliatedManifold::V1};
  switch (h) {
  case HMap::h1:
    m.targets = {FamilyId::G1};
    break;
  case HMap::h2:
    m.targets = {FamilyId::G4};
    break;
  case HMap::h3:
    m.targets = {FamilyId::G7};
    break;
  case HMap::h4:
    m.targets = {FamilyId::G8};
    break;
  case HMap::h5:
    m.targets = {FamilyId::G11};
    break;
  case HMap::h6:
    m.source = FamilyId::G3;
    m.targets = {FamilyId::G5, FamilyId::G6};
    break;
  case HMap::h7:
    m.source = FamilyId::G12;
    m.source_params = lambda0();
    m.targets = {FamilyId::G12};
    m.domain = FoliatedManifold::V2;
    break;
  case HMap::h8:
  case HMap::h9:
  case HMap::h10:
  case HMap::h11:
    m.source = FamilyId::G13;
    m.source_params = lambda0();
    m.domain = FoliatedManifold::V3;
    m.targets = {h == HMap::h8    ? FamilyId::G13
                 : h == HMap::h9  ? FamilyId::G14
                 : h == HMap::h10 ? FamilyId::G15
                                  : FamilyId::G16};
    break;
  }
  // h6 carries no parameter of its own; G6's λ only matters for that target.
  if (h != HMap::h6)
    if (auto bad = validate_params(m.targets.front(), tp))
      throw ConstraintViolation(to_string(h) + ": " + *bad);
  return m;
}

OrbitPoint apply_h(const Homeomorphism &h, const OrbitPoint &v) {
  return {transform(h, v.coords, +1)};
}

OrbitPoint apply_h_inverse(const Homeomorphism &h, const OrbitPoint &w) {
  return {transform(h, w.coords, -1)};
}

OrbitPoint sample_manifold_point(FoliatedManifold m, std::uint64_t seed,
                                 std::uint64_t index, double margin) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    const OrbitPoint v = random_point(seed, index, attempt);
    const double a4 = std::abs(v.coords(X4)), a5 = std::abs(v.coords(X5));
    bool ok = false;
    switch (m) {
    case FoliatedManifold::V1:
      ok = a4 > margin && a5 > margin;
      break;
    case FoliatedManifold::V2:
      ok = a5 > margin;
      break;
    case FoliatedManifold::V3:
      ok = std::hypot(a4, a5) > margin;
      break;
    }
    if (ok)
      return v;
  }
}

CheckResult round_trip_check(const Homeomorphism &h, std::size_t n, std::uint64_t seed) {
  CheckBuilder cb(to_string(h.id) + "_round_trip", 1e-10);
  const std::uint64_t s = seed ^ tag(to_string(h.id));
  auto one = [&](const OrbitPoint &v) {
    try {
      const OrbitPoint back = apply_h_inverse(h, apply_h(h, v));
      cb.add((back.coords - v.coords).cwiseAbs().maxCoeff() /
                 std::max(1.0, v.coords.cwiseAbs().maxCoeff()),
             v.coords);
    } catch (const DomainError &) {
      cb.skip();
    }
  };
  for (std::size_t k = 0; k < n; ++k) {
    OrbitPoint v = sample_manifold_point(h.domain, s, k);
    // Exercise the boundary branches of the piecewise maps.
    if (h.domain == FoliatedManifold::V3 && k % 4 == 1)
      v.coords(X4) = 0.0;
    if (h.domain == FoliatedManifold::V3 && k % 4 == 2)
      v.coords(X5) = 0.0;
    if (h.domain == FoliatedManifold::V3 && !in_manifold(v, h.domain))
      continue;
    one(v);
  }
  return cb.finish();
}

CheckResult verify_leaf_map(const Homeomorphism &h, std::size_t n, std::uint64_t seed,
                            std::size_t group_samples) {
  const FamilyId target = h.targets.front();
  const bool printed = h.id == HMap::h2 || h.id == HMap::h7 || h.id == HMap::h8;

  if (printed) {
    CheckBuilder cb(to_string(h.id) + "_leaf_map", 1e-8);
    const std::uint64_t s = seed ^ tag(to_string(h.id) + "-leaf");
    std::size_t domain_errors = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const OrbitPoint v = sample_manifold_point(h.domain, s, k);
      try {
        const double ps = invariant(h.source, h.source_params, v);
        const double pt = invariant(target, h.params, apply_h(h, v));
        cb.add(std::abs(pt - ps) / (1.0 + std::abs(ps)), v.coords);
      } catch (const DomainError &) {
        ++domain_errors;
        cb.skip();
      }
    }
    if (domain_errors)
      cb.note(std::to_string(domain_errors) + " domain errors");
    return cb.finish();
  }

  if (invariant_kind(h.source) == InvariantKind::None) {
    CheckResult r;
    r.name = to_string(h.id) + "_leaf_map";
    r.passed = false;
    r.note = "source invariant not available; see tangent-map check";
    return r;
  }

  CheckResult r = invariant_constancy(target, h.params, n, group_samples,
                                      seed ^ tag(to_string(h.id) + "-derived"), 1e-7);
  r.name = to_string(h.id) + "_derived_invariant_constancy";
  return r;
}

CheckResult tangent_map_check(const Homeomorphism &h, FamilyId target, std::size_t n,
                              std::uint64_t seed) {
  CheckBuilder cb(to_string(h.id) + "_tangent_map_" + to_string(target), 1e-7);
  const LieAlgebra7 src = build_family(h.source, h.source_params);
  const FamilyParams tp = (h.id == HMap::h6 && target == FamilyId::G5) ? FamilyParams{} : h.params;
  const LieAlgebra7 tgt = build_family(target, tp);
  const std::uint64_t s = seed ^ tag(to_string(h.id) + "-tangent");
  const double step = 1e-6;

  for (std::size_t k = 0; k < n; ++k) {
    const OrbitPoint v = sample_manifold_point(h.domain, s, k, 0.2);
    try {
      const Matrix7 bs = kirillov_form(src, v.as_functional());
      if (numeric_rank(bs) != 6) {
        cb.skip();
        continue;
      }
      const OrbitPoint w = apply_h(h, v);
      const Matrix7 bt = kirillov_form(tgt, w.as_functional());
      // dh applied to each source tangent direction by central differences.
      Matrix7 pushed;
      for (int c = 0; c < DIM; ++c) {
        const Vec7 d = bs.col(c);
        pushed.col(c) = (apply_h(h, {v.coords + step * d}).coords -
                         apply_h(h, {v.coords - step * d}).coords) /
                        (2.0 * step);
      }
      Eigen::Matrix<double, 7, 14> both;
      both << pushed / pushed.norm(), bt / bt.norm();
      Eigen::JacobiSVD<Eigen::Matrix<double, 7, 14>> svd(both);
      const auto &sv = svd.singularValues();
      cb.add(sv(6) / sv(0), v.coords);
    } catch (const DomainError &) {
      cb.skip();
    }
  }
  return cb.finish();
}

CheckResult fibration_check(FoliationType t, std::size_t n, std::uint64_t seed) {
  CheckBuilder cb(std::string("fibration_") + to_string(t), 1e6);
  cb.note("residual is 1/|grad p|");
  const FoliatedManifold m = manifold_for(t);
  const FamilyId rep = t == FoliationType::F1   ? FamilyId::G2
                       : t == FoliationType::F2 ? FamilyId::G12
                                                : FamilyId::G13;
  const FamilyParams rp = t == FoliationType::F1 ? FamilyParams{} : lambda0();
  const std::uint64_t s = seed ^ tag(std::string("fibration-") + to_string(t));
  const double step = 1e-6;

  for (std::size_t k = 0; k < n; ++k) {
    const OrbitPoint v = sample_manifold_point(m, s, k);
    try {
      Vec7 grad;
      for (int i = 0; i < DIM; ++i) {
        Vec7 e = Vec7::Zero();
        e(i) = step;
        grad(i) = (invariant(rep, rp, {v.coords + e}) - invariant(rep, rp, {v.coords - e})) /
                  (2.0 * step);
      }
      cb.add(1.0 / grad.norm(), v.coords);
    } catch (const DomainError &) {
      cb.skip();
    }
  }
  return cb.finish();
}

} // namespace gmd
