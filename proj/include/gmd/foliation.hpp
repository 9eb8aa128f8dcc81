#ifndef GMD_FOLIATION_HPP
#define GMD_FOLIATION_HPP

#include <array>

#include "gmd/catalog.hpp"
#include "gmd/coadjoint.hpp"
#include "gmd/lie_core.hpp"
#include "gmd/report.hpp"

namespace gmd {

/// v -> A v + b.
struct LinearVectorField {
  Matrix7 linear_part = Matrix7::Zero();
  Vec7 constant_part = Vec7::Zero();

  Vec7 operator()(const Vec7 &v) const { return linear_part * v + constant_part; }
};

/// [f, g] for affine fields, computed exactly.
LinearVectorField lie_bracket(const LinearVectorField &f, const LinearVectorField &g);

/// Fields X1..X6 stored at indices 0..5.
struct DifferentialSystem {
  FamilyId family;
  FamilyParams params;
  std::array<LinearVectorField, 6> fields;

  /// 6x7 matrix of field values at v, one row per field.
  Eigen::Matrix<double, 6, 7> values(const Vec7 &v) const;
};

bool has_system(FamilyId id);

/// Throws UnsupportedFamily for G2, G3, G9, G10.
DifferentialSystem system_fields(FamilyId id, const FamilyParams &p);

bool has_closed_flow(FamilyId id);

/// Closed-form flow of field X_{field_index} (1-based) for G4, G12, G13.
OrbitPoint flow_closed(FamilyId id, const FamilyParams &p, int field_index, double t,
                       const OrbitPoint &v);

/// Classical RK4 on v' = A v + b.
OrbitPoint flow_numeric(const LinearVectorField &field, double t, const OrbitPoint &v,
                        int steps);

enum class InvariantKind { None, Printed, Derived };
InvariantKind invariant_kind(FamilyId id);

/// Orbit invariant. Printed for G2, G4, G12, G13; for G1, G7, G8, G11 and
/// G14, G15, G16 it is the reference invariant composed with the inverse
/// leaf map. Throws DomainError off the domain.
double invariant(FamilyId id, const FamilyParams &p, const OrbitPoint &v);

/// Sign sector on which the invariant formula is a single branch. Values of
/// the invariant are only comparable inside one sector.
int invariant_sector(FamilyId id, const OrbitPoint &v);

int numeric_rank(const Eigen::MatrixXd &m, double tol);

/// span S_G(v) == image B_v, both of rank 6. Throws DomainError outside V_G.
bool distribution_equiv(FamilyId id, const FamilyParams &p, const OrbitPoint &v,
                        double tol = DEFAULT_RANK_TOL);

/// Largest component of [X_i, X_j](v) orthogonal to span S_G(v).
double involutivity_residual(FamilyId id, const FamilyParams &p, const OrbitPoint &v);

/// max over X2, X3, X4 of the central difference of the invariant.
double annihilation_residual(FamilyId id, const FamilyParams &p, const OrbitPoint &v,
                             double h = 1e-5);

/// Same, along the columns of B_v (orbit tangent directions); works without S_G.
double annihilation_residual_orbit(FamilyId id, const FamilyParams &p,
                                   const OrbitPoint &v, double h = 1e-5);

/// Random functional with rank-6 orbit inside V_G, alpha4, alpha5 in
/// [0.05, 2] (the ++ sector) and the rest uniform in [-2, 2].
Functional sample_generic_functional(FamilyId id, const FamilyParams &p,
                                     std::uint64_t seed, std::uint64_t index);

/// |p(F_U) - p(F)| / (1 + |p(F)|) over nf functionals and ng group elements
/// each. Images leaving the sector of F are skipped and counted.
CheckResult invariant_constancy(FamilyId id, const FamilyParams &p, std::size_t nf,
                                std::size_t ng, std::uint64_t seed, double tol = 1e-7,
                                double radius = 1.5);

} // namespace gmd

#endif
