#include "gmd/coadjoint.hpp"

#include <cmath>
#include <sstream>

#include "gmd/errors.hpp"
#include "gmd/rng.hpp"
#include "gmd/topology.hpp"

namespace gmd {

const char *to_string(OrbitType t) {
  switch (t) {
  case OrbitType::Generic:
    return "Generic";
  case OrbitType::Type1MaxNonGeneric:
    return "Type1MaxNonGeneric";
  case OrbitType::LowerDimensional:
    return "LowerDimensional";
  }
  return "?";
}

Matrix7 kirillov_form(const LieAlgebra7 &alg, const Functional &f) {
  Matrix7 b = Matrix7::Zero();
  for (int i = 0; i < DIM; ++i)
    for (int j = i + 1; j < DIM; ++j) {
      double s = 0.0;
      for (int k = 0; k < DIM; ++k)
        s += f.coords(k) * alg.cd(i, j, k);
      b(i, j) = s;
      b(j, i) = -s;
    }
  return b;
}

int numeric_rank(const Matrix7 &m, double tol) {
  Eigen::JacobiSVD<Matrix7> svd(m);
  const auto &s = svd.singularValues();
  if (s(0) == 0.0)
    return 0;
  int r = 0;
  for (int k = 0; k < s.size(); ++k)
    if (s(k) > tol * s(0))
      ++r;
  return r;
}

bool has_rank_condition(FamilyId id) {
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

bool rank_condition(FamilyId id, const FamilyParams &, const Functional &f) {
  const double a2 = f.coords(1), a3 = f.coords(2), a4 = f.coords(3), a5 = f.coords(4);
  switch (id) {
  case FamilyId::G1:
    return a5 != 0.0 && a2 * a2 + a4 * a4 != 0.0;
  case FamilyId::G4:
  case FamilyId::G5:
  case FamilyId::G6:
    return (a4 == 0.0 && a2 * a5 != 0.0) || (a4 != 0.0 && a3 * a3 + a5 * a5 != 0.0);
  case FamilyId::G7:
  case FamilyId::G8:
    return a4 * a4 + a5 * a5 != 0.0 && !(a3 == 0.0 && a5 == 0.0 && a4 != 0.0);
  case FamilyId::G11:
    return a4 != 0.0 && a3 * a3 + a5 * a5 != 0.0;
  case FamilyId::G12:
    return (a3 * a4 != 0.0 && a5 == 0.0) || a5 != 0.0;
  case FamilyId::G13:
  case FamilyId::G14:
  case FamilyId::G15:
  case FamilyId::G16:
    return a4 * a4 + a5 * a5 != 0.0;
  default:
    throw UnsupportedFamily(to_string(id) + ": rank condition not available ([t-v])");
  }
}

Matrix7 coadjoint_map(const LieAlgebra7 &alg, const AlgebraElement &u) {
  return exp_matrix(ad_matrix(alg, u)).transpose();
}

OrbitPoint coadjoint_act(const LieAlgebra7 &alg, const AlgebraElement &u,
                         const Functional &f) {
  return {coadjoint_map(alg, u) * f.coords};
}

AlgebraElement sample_element(std::uint64_t seed, std::uint64_t index, double radius) {
  CounterRng rng(seed, {0x5eedULL, index});
  AlgebraElement u;
  for (int i = 0; i < DIM; ++i)
    u.coords(i) = rng.uniform(-radius, radius);
  return u;
}

std::vector<OrbitPoint> sample_orbit(const LieAlgebra7 &alg, const Functional &f,
                                     std::size_t n, std::uint64_t seed, double radius) {
  std::vector<OrbitPoint> pts;
  pts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const AlgebraElement u = sample_element(seed, k, radius);
    try {
      pts.push_back(coadjoint_act(alg, u, f));
    } catch (const DomainError &e) {
      throw DomainError(std::string(e.what()) + " at U=" + format_vec(u.coords));
    }
  }
  return pts;
}

OrbitType orbit_type(FamilyId id, const FamilyParams &p, const Functional &f,
                     double tol) {
  const LieAlgebra7 alg = build_family(id, p);
  if (numeric_rank(kirillov_form(alg, f), tol) != 6)
    return OrbitType::LowerDimensional;
  return in_manifold(OrbitPoint{f.coords}, manifold_of(id)) ? OrbitType::Generic
                                                            : OrbitType::Type1MaxNonGeneric;
}

JacobianCheck jacobian_check(const LieAlgebra7 &alg, const AlgebraElement &u) {
  const Matrix7 ad = ad_matrix(alg, u);
  const Matrix7 m = exp_matrix(ad).transpose();
  return {m.determinant(), std::exp(ad.trace())};
}

std::string format_vec(const Vec7 &v) {
  std::ostringstream os;
  os.precision(17);
  os << "[";
  for (int i = 0; i < v.size(); ++i)
    os << (i ? ", " : "") << v(i);
  os << "]";
  return os.str();
}

} // namespace gmd
