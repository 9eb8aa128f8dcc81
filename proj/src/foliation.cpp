#include "gmd/foliation.hpp"

#include <cmath>

#include "gmd/errors.hpp"
#include "gmd/rng.hpp"
#include "gmd/topology.hpp"

namespace gmd {

namespace {

// Field sum_{i=2..5} (sum_j c[i][j] x_j) d/dx_i with x_j running over x2..x5.
LinearVectorField nil_field(const std::array<std::array<double, 4>, 4> &c) {
  LinearVectorField f;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      f.linear_part(1 + i, 1 + j) = c[i][j];
  return f;
}

LinearVectorField coordinate_field(int k) {
  LinearVectorField f;
  f.constant_part(k) = 1.0;
  return f;
}

void require_system(FamilyId id) {
  if (!has_system(id))
    throw UnsupportedFamily(to_string(id) + ": differential system not available ([t-v])");
}

void require_domain(FamilyId id, const OrbitPoint &v) {
  const FoliatedManifold m = manifold_of(id);
  if (!in_manifold(v, m))
    throw DomainError(to_string(id) + ": point outside " + to_string(m));
}

int sgn(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

HMap derived_map(FamilyId id) {
  switch (id) {
  case FamilyId::G1:
    return HMap::h1;
  case FamilyId::G7:
    return HMap::h3;
  case FamilyId::G8:
    return HMap::h4;
  case FamilyId::G11:
    return HMap::h5;
  case FamilyId::G14:
    return HMap::h9;
  case FamilyId::G15:
    return HMap::h10;
  case FamilyId::G16:
    return HMap::h11;
  default:
    throw UnsupportedFamily(to_string(id) + ": no derived invariant");
  }
}

// x2 - x3 x4 / x5
double p_g2(const Vec7 &x) { return x(1) - x(2) * x(3) / x(4); }

} // namespace

LinearVectorField lie_bracket(const LinearVectorField &f, const LinearVectorField &g) {
  const Matrix7 &a = f.linear_part, &c = g.linear_part;
  const Vec7 &b = f.constant_part, &d = g.constant_part;
  return {c * a - a * c, c * b - a * d};
}

Eigen::Matrix<double, 6, 7> DifferentialSystem::values(const Vec7 &v) const {
  Eigen::Matrix<double, 6, 7> m;
  for (int i = 0; i < 6; ++i)
    m.row(i) = fields[i](v).transpose();
  return m;
}

bool has_system(FamilyId id) {
  switch (id) {
  case FamilyId::G2:
  case FamilyId::G3:
  case FamilyId::G9:
  case FamilyId::G10:
    return false;
  default:
    return true;
  }
}

DifferentialSystem system_fields(FamilyId id, const FamilyParams &p) {
  require_system(id);
  const double l = p.l(), l1 = p.l1(), l2 = p.l2();

  // Rows: components along d2..d5; columns: coefficients of x2..x5.
  using C = std::array<std::array<double, 4>, 4>;
  C f2{}, f3{};
  switch (id) {
  case FamilyId::G1:
    f2 = C{{{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}}};
    f3 = C{{{-1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}}};
    break;
  case FamilyId::G4:
    f2 = C{{{0, 0, 0, 0}, {0, l1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1 + l1}}};
    f3 = C{{{1, 0, 0, 0}, {0, l2, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, l2}}};
    break;
  case FamilyId::G5:
    f2 = C{{{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}}};
    f3 = C{{{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 1}}};
    break;
  case FamilyId::G6:
    f2 = C{{{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}}};
    f3 = C{{{1, 0, 0, 0}, {0, l, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, l + 1}}};
    break;
  case FamilyId::G7:
    f2 = C{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
    f3 = C{{{1, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 1}}};
    break;
  case FamilyId::G8:
    f2 = C{{{l + 1, 0, 0, 0}, {0, l, 0, 0}, {0, 0, l + 2, 0}, {0, 0, 0, l + 1}}};
    f3 = C{{{1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
    break;
  case FamilyId::G11:
    f2 = C{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
    f3 = C{{{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}}};
    break;
  case FamilyId::G12:
    f2 = C{{{l, 0, 0, 0}, {0, l, 0, 0}, {0, 0, l + 1, 0}, {0, 0, 0, l + 1}}};
    f3 = C{{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}}};
    break;
  case FamilyId::G13:
    f2 = C{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
    // The (x4, x5) part follows the derived flow and B_F; see README.
    f3 = C{{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, l, 1}, {0, 0, -1, l}}};
    break;
  case FamilyId::G14:
    f2 = C{{{l1, 0, 0, 0}, {0, l1, 0, 0}, {0, 0, 1 + l1, 0}, {0, 0, 0, 1 + l1}}};
    f3 = C{{{l2, 1, 0, 0}, {-1, l2, 0, 0}, {0, 0, l2, 1}, {0, 0, -1, l2}}};
    break;
  case FamilyId::G15:
    f2 = C{{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}};
    f3 = C{{{1, 0, 0, 1}, {0, 1, -1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
    break;
  case FamilyId::G16:
    f2 = C{{{0, 1, 0, 1}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}};
    f3 = C{{{1, 0, 0, l}, {0, 1, -l, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
    break;
  default:
    break;
  }

  DifferentialSystem s{id, p, {}};
  s.fields[0] = coordinate_field(X1);
  s.fields[1] = nil_field(f2);
  s.fields[2] = nil_field(f3);
  s.fields[3] = nil_field(C{{{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}}});
  s.fields[4] = coordinate_field(XX);
  s.fields[5] = coordinate_field(YY);
  return s;
}

bool has_closed_flow(FamilyId id) {
  return id == FamilyId::G4 || id == FamilyId::G12 || id == FamilyId::G13;
}

OrbitPoint flow_closed(FamilyId id, const FamilyParams &p, int field_index, double t,
                       const OrbitPoint &v) {
  if (!has_closed_flow(id))
    throw UnsupportedFamily(to_string(id) + ": no closed-form flow");
  if (field_index < 1 || field_index > 6)
    throw UnsupportedFamily("field index must be in 1..6");

  Vec7 x = v.coords;
  switch (field_index) {
  case 1:
    x(X1) += t;
    return {x};
  case 4:
    x(X2) += v.coords(X4) * t;
    x(X3) += v.coords(X5) * t;
    return {x};
  case 5:
    x(XX) += t;
    return {x};
  case 6:
    x(YY) += t;
    return {x};
  default:
    break;
  }

  const double a2 = v.coords(X2), a3 = v.coords(X3), a4 = v.coords(X4), a5 = v.coords(X5);
  if (id == FamilyId::G4) {
    const double l1 = p.l1(), l2 = p.l2();
    if (field_index == 2) {
      x(X3) = a3 * std::exp(l1 * t);
      x(X4) = a4 * std::exp(t);
      x(X5) = a5 * std::exp((1 + l1) * t);
    } else {
      x(X2) = a2 * std::exp(t);
      x(X3) = a3 * std::exp(l2 * t);
      x(X4) = a4 * std::exp(t);
      x(X5) = a5 * std::exp(l2 * t);
    }
  } else if (id == FamilyId::G12) {
    const double l = p.l();
    if (field_index == 2) {
      x(X2) = a2 * std::exp(l * t);
      x(X3) = a3 * std::exp(l * t);
      x(X4) = a4 * std::exp((l + 1) * t);
      x(X5) = a5 * std::exp((l + 1) * t);
    } else {
      const double e = std::exp(t);
      x(X2) = a2 * e + a3 * t * e;
      x(X3) = a3 * e;
      x(X4) = a4 * e + a5 * t * e;
      x(X5) = a5 * e;
    }
  } else {
    const double l = p.l();
    if (field_index == 2) {
      // Solution of the ODE; the summary formula drops the factor on x2.
      const double e = std::exp(t);
      x(X2) = a2 * e;
      x(X3) = a3 * e;
      x(X4) = a4 * e;
      x(X5) = a5 * e;
    } else {
      const double c = std::cos(t), s = std::sin(t), e = std::exp(l * t);
      x(X2) = a2 * c + a3 * s;
      x(X3) = -a2 * s + a3 * c;
      x(X4) = (a4 * c + a5 * s) * e;
      x(X5) = (-a4 * s + a5 * c) * e;
    }
  }
  return {x};
}

OrbitPoint flow_numeric(const LinearVectorField &field, double t, const OrbitPoint &v,
                        int steps) {
  if (steps < 1)
    throw std::invalid_argument("flow_numeric: steps must be >= 1");
  const double h = t / steps;
  Vec7 x = v.coords;
  for (int s = 0; s < steps; ++s) {
    const Vec7 k1 = field(x);
    const Vec7 k2 = field(x + 0.5 * h * k1);
    const Vec7 k3 = field(x + 0.5 * h * k2);
    const Vec7 k4 = field(x + h * k3);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return {x};
}

InvariantKind invariant_kind(FamilyId id) {
  switch (id) {
  case FamilyId::G2:
  case FamilyId::G4:
  case FamilyId::G12:
  case FamilyId::G13:
    return InvariantKind::Printed;
  case FamilyId::G1:
  case FamilyId::G7:
  case FamilyId::G8:
  case FamilyId::G11:
  case FamilyId::G14:
  case FamilyId::G15:
  case FamilyId::G16:
    return InvariantKind::Derived;
  default:
    return InvariantKind::None;
  }
}

double invariant(FamilyId id, const FamilyParams &p, const OrbitPoint &v) {
  if (invariant_kind(id) == InvariantKind::None)
    throw UnsupportedFamily(to_string(id) + ": no invariant available");
  require_domain(id, v);
  const Vec7 &x = v.coords;

  switch (id) {
  case FamilyId::G2:
    return p_g2(x);
  case FamilyId::G4: {
    const double m = p.l2() - p.l1() - 1.0;
    return p_g2(x) * std::pow(std::abs(x(X4)), (1.0 + p.l1()) / m) /
           std::pow(std::abs(x(X5)), 1.0 / m);
  }
  case FamilyId::G12: {
    const double l = p.l();
    return p_g2(x) /
           (std::pow(std::abs(x(X5)), l / (1.0 + l)) * std::exp(x(X4) / ((1.0 + l) * x(X5))));
  }
  case FamilyId::G13: {
    if (x(X5) == 0.0)
      throw DomainError("G13: arctan(x4/x5) needs x5 != 0");
    const double r2 = x(X4) * x(X4) + x(X5) * x(X5);
    return (x(X2) * x(X5) - x(X3) * x(X4)) / r2 * std::exp(p.l() * std::atan(x(X4) / x(X5)));
  }
  default: {
    const Homeomorphism h = make_homeomorphism(derived_map(id), p);
    const OrbitPoint src = apply_h_inverse(h, v);
    return invariant(h.source, h.source_params, src);
  }
  }
}

int invariant_sector(FamilyId id, const OrbitPoint &v) {
  const int s4 = sgn(v.coords(X4)), s5 = sgn(v.coords(X5));
  switch (id) {
  case FamilyId::G12:
  case FamilyId::G13:
  case FamilyId::G15:
    return s5;
  case FamilyId::G14:
  case FamilyId::G16:
    return s4 == 0 ? 10 + s5 : s4;
  default:
    return 3 * s4 + s5;
  }
}

int numeric_rank(const Eigen::MatrixXd &m, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto &s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0)
    return 0;
  int r = 0;
  for (int k = 0; k < s.size(); ++k)
    if (s(k) > tol * s(0))
      ++r;
  return r;
}

bool distribution_equiv(FamilyId id, const FamilyParams &p, const OrbitPoint &v,
                        double tol) {
  require_system(id);
  require_domain(id, v);
  const DifferentialSystem sys = system_fields(id, p);
  const LieAlgebra7 alg = build_family(id, p);

  const Eigen::MatrixXd s = sys.values(v.coords);
  const Eigen::MatrixXd b = kirillov_form(alg, v.as_functional()).transpose();
  Eigen::MatrixXd both(13, 7);
  both << s, b;
  return numeric_rank(s, tol) == 6 && numeric_rank(b, tol) == 6 &&
         numeric_rank(both, tol) == 6;
}

double involutivity_residual(FamilyId id, const FamilyParams &p, const OrbitPoint &v) {
  require_system(id);
  require_domain(id, v);
  const DifferentialSystem sys = system_fields(id, p);

  const Eigen::MatrixXd cols = sys.values(v.coords).transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cols, Eigen::ComputeThinU);
  const auto &sv = svd.singularValues();
  int r = 0;
  for (int k = 0; k < sv.size(); ++k)
    if (sv(k) > DEFAULT_RANK_TOL * sv(0))
      ++r;
  const Eigen::MatrixXd q = svd.matrixU().leftCols(r);

  double worst = 0.0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      const Vec7 w = lie_bracket(sys.fields[i], sys.fields[j])(v.coords);
      const Eigen::VectorXd perp = w - q * (q.transpose() * w);
      worst = std::max(worst, perp.norm());
    }
  return worst;
}

double annihilation_residual(FamilyId id, const FamilyParams &p, const OrbitPoint &v,
                             double h) {
  const DifferentialSystem sys = system_fields(id, p);
  double worst = 0.0;
  for (int k = 1; k <= 3; ++k) {
    const Vec7 dir = sys.fields[k](v.coords);
    const double fp = invariant(id, p, {v.coords + h * dir});
    const double fm = invariant(id, p, {v.coords - h * dir});
    worst = std::max(worst, std::abs((fp - fm) / (2.0 * h)));
  }
  return worst;
}

double annihilation_residual_orbit(FamilyId id, const FamilyParams &p,
                                   const OrbitPoint &v, double h) {
  const LieAlgebra7 alg = build_family(id, p);
  const Matrix7 b = kirillov_form(alg, v.as_functional());
  double worst = 0.0;
  for (int k = 0; k < DIM; ++k) {
    const Vec7 dir = b.col(k);
    const double fp = invariant(id, p, {v.coords + h * dir});
    const double fm = invariant(id, p, {v.coords - h * dir});
    worst = std::max(worst, std::abs((fp - fm) / (2.0 * h)));
  }
  return worst;
}

Functional sample_generic_functional(FamilyId id, const FamilyParams &p,
                                     std::uint64_t seed, std::uint64_t index) {
  const LieAlgebra7 alg = build_family(id, p);
  const FoliatedManifold m = manifold_of(id);
  for (std::uint64_t attempt = 0;; ++attempt) {
    CounterRng rng(seed, {tag("generic-functional"), static_cast<std::uint64_t>(id), index,
                          attempt});
    Functional f;
    for (int i = 0; i < DIM; ++i)
      f.coords(i) = rng.uniform(-2.0, 2.0);
    f.coords(X4) = rng.uniform(0.05, 2.0);
    f.coords(X5) = rng.uniform(0.05, 2.0);
    if (in_manifold(OrbitPoint{f.coords}, m) &&
        numeric_rank(kirillov_form(alg, f), DEFAULT_RANK_TOL) == 6)
      return f;
  }
}

CheckResult invariant_constancy(FamilyId id, const FamilyParams &p, std::size_t nf,
                                std::size_t ng, std::uint64_t seed, double tol,
                                double radius) {
  const LieAlgebra7 alg = build_family(id, p);
  CheckBuilder cb("invariant_constancy", tol);
  std::size_t left_sector = 0, domain_errors = 0;
  for (std::size_t i = 0; i < nf; ++i) {
    const Functional f = sample_generic_functional(id, p, seed, i);
    const OrbitPoint f0{f.coords};
    double p0;
    try {
      p0 = invariant(id, p, f0);
    } catch (const DomainError &) {
      ++domain_errors;
      cb.skip();
      continue;
    }
    const int sector = invariant_sector(id, f0);
    const std::uint64_t useed = splitmix64(seed ^ tag("constancy-u")) + i;
    for (std::size_t k = 0; k < ng; ++k) {
      const AlgebraElement u = sample_element(useed, k, radius);
      OrbitPoint g;
      try {
        g = coadjoint_act(alg, u, f);
      } catch (const DomainError &e) {
        cb.fail(u.coords, e.what());
        continue;
      }
      if (invariant_sector(id, g) != sector) {
        ++left_sector;
        cb.skip();
        continue;
      }
      try {
        const double pg = invariant(id, p, g);
        cb.add(std::abs(pg - p0) / (1.0 + std::abs(p0)), g.coords);
      } catch (const DomainError &) {
        ++domain_errors;
        cb.skip();
      }
    }
  }
  if (left_sector)
    cb.note(std::to_string(left_sector) + " images outside the starting sector");
  if (domain_errors)
    cb.note(std::to_string(domain_errors) + " domain errors");
  return cb.finish();
}

} // namespace gmd
