#ifndef GMD_COADJOINT_HPP
#define GMD_COADJOINT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gmd/catalog.hpp"
#include "gmd/lie_core.hpp"

namespace gmd {

/// F = (α1..α5, α, β) in the dual basis.
struct Functional {
  Vec7 coords = Vec7::Zero();
};

/// Point F_U of an orbit, coordinates (x*_1..x*_5, x*, y*).
struct OrbitPoint {
  Vec7 coords = Vec7::Zero();
  Functional as_functional() const { return {coords}; }
};

enum class OrbitType { Generic, Type1MaxNonGeneric, LowerDimensional };
const char *to_string(OrbitType t);

constexpr double DEFAULT_RANK_TOL = 1e-9;

/// B_F(i,j) = <F, [e_i, e_j]>.
Matrix7 kirillov_form(const LieAlgebra7 &alg, const Functional &f);

/// Singular values above tol * sigma_1.
int numeric_rank(const Matrix7 &m, double tol = DEFAULT_RANK_TOL);

/// The printed closed-form condition for rank B_F = 6. Throws
/// UnsupportedFamily for G2, G3, G9, G10.
bool rank_condition(FamilyId id, const FamilyParams &p, const Functional &f);
bool has_rank_condition(FamilyId id);

/// Matrix of f -> F_U, i.e. exp(ad_U)^T.
Matrix7 coadjoint_map(const LieAlgebra7 &alg, const AlgebraElement &u);
OrbitPoint coadjoint_act(const LieAlgebra7 &alg, const AlgebraElement &u,
                         const Functional &f);

/// U uniform in the sup-norm ball, keyed on (seed, index).
AlgebraElement sample_element(std::uint64_t seed, std::uint64_t index, double radius);

/// Throws DomainError naming the offending U on overflow.
std::vector<OrbitPoint> sample_orbit(const LieAlgebra7 &alg, const Functional &f,
                                     std::size_t n, std::uint64_t seed,
                                     double radius = 1.5);

OrbitType orbit_type(FamilyId id, const FamilyParams &p, const Functional &f,
                     double tol = DEFAULT_RANK_TOL);

struct JacobianCheck {
  double det_of_action;
  double exp_trace;
};
JacobianCheck jacobian_check(const LieAlgebra7 &alg, const AlgebraElement &u);

std::string format_vec(const Vec7 &v);

} // namespace gmd

#endif
