#ifndef GMD_TOPOLOGY_HPP
#define GMD_TOPOLOGY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gmd/catalog.hpp"
#include "gmd/coadjoint.hpp"
#include "gmd/report.hpp"

namespace gmd {

/// V1: x4 x5 != 0, V2: x5 != 0, V3: x4^2 + x5^2 != 0.
enum class FoliatedManifold { V1, V2, V3 };
const char *to_string(FoliatedManifold m);

FoliatedManifold manifold_of(FamilyId id);
bool in_manifold(const OrbitPoint &v, FoliatedManifold m);
int component_count(FoliatedManifold m);

/// "++", "-+", "--", "+-" on V1; "+", "-" on V2; "single" on V3.
std::string component_of(const OrbitPoint &v, FoliatedManifold m);

enum class FoliationType { F1, F2, F3 };
const char *to_string(FoliationType t);

FoliationType classify(FamilyId id);
FoliatedManifold manifold_for(FoliationType t);
std::string cstar_descriptor(FoliationType t);

enum class HMap { h1 = 1, h2, h3, h4, h5, h6, h7, h8, h9, h10, h11 };
std::string to_string(HMap h);
std::vector<HMap> all_hmaps();

struct Homeomorphism {
  HMap id;
  FamilyParams params;  // parameters of the target family
  FamilyId source;
  FamilyParams source_params;
  std::vector<FamilyId> targets;
  FoliatedManifold domain;
};

/// Throws ConstraintViolation when params do not fit the target family.
Homeomorphism make_homeomorphism(HMap h, const FamilyParams &target_params);

/// Throws DomainError outside the domain of the formula.
OrbitPoint apply_h(const Homeomorphism &h, const OrbitPoint &v);
OrbitPoint apply_h_inverse(const Homeomorphism &h, const OrbitPoint &w);

/// Printed-invariant maps (h2, h7, h8) compare p_target(h(v)) with
/// p_source(v); the others check that p_source o h^-1 is constant along
/// orbits of the target family.
CheckResult verify_leaf_map(const Homeomorphism &h, std::size_t n, std::uint64_t seed,
                            std::size_t group_samples = 200);

/// dh maps the orbit tangent space of the source onto that of the target.
/// Residual is sigma_7/sigma_1 of [dh B_src | B_tgt].
CheckResult tangent_map_check(const Homeomorphism &h, FamilyId target, std::size_t n,
                              std::uint64_t seed);

CheckResult round_trip_check(const Homeomorphism &h, std::size_t n, std::uint64_t seed);

/// Gradient of the representative leaf function is nonzero. Residual is
/// 1/|grad p|, tolerance 1e6.
CheckResult fibration_check(FoliationType t, std::size_t n, std::uint64_t seed);

/// Random point of m, away from its boundary by at least margin.
OrbitPoint sample_manifold_point(FoliatedManifold m, std::uint64_t seed,
                                 std::uint64_t index, double margin = 0.05);

} // namespace gmd

#endif
