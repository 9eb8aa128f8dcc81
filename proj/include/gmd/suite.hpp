#ifndef GMD_SUITE_HPP
#define GMD_SUITE_HPP

#include <cstdint>
#include <vector>

#include "gmd/catalog.hpp"
#include "gmd/report.hpp"

namespace gmd {

struct Tolerances {
  double rank = 1e-9;
  double invariant = 1e-7;
  double flow = 1e-6;
};

struct SuiteConfig {
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  Tolerances tol;
};

/// Full per-family campaign: every check that applies to the family.
VerificationReport run_family_suite(FamilyId id, const FamilyParams &p,
                                    const SuiteConfig &cfg);

// Individual checks, each keyed on (seed, family, check, sample).
CheckResult jacobi_check(FamilyId id, const FamilyParams &p);
CheckResult max_rank_check(FamilyId id, const FamilyParams &p, std::size_t n,
                           std::uint64_t seed, double tol);
CheckResult predicate_agreement_check(FamilyId id, const FamilyParams &p, std::size_t n,
                                      std::uint64_t seed, double tol);
CheckResult orbit_rank_constancy_check(FamilyId id, const FamilyParams &p, std::size_t nf,
                                       std::size_t ng, std::uint64_t seed, double tol);
CheckResult distribution_check(FamilyId id, const FamilyParams &p, std::size_t n,
                               std::uint64_t seed, double tol);
CheckResult involutivity_check(FamilyId id, const FamilyParams &p, std::size_t n,
                               std::uint64_t seed);
CheckResult annihilation_check(FamilyId id, const FamilyParams &p, std::size_t n,
                               std::uint64_t seed);
CheckResult jacobian_campaign(FamilyId id, const FamilyParams &p, std::size_t n,
                              std::uint64_t seed);
CheckResult flow_field_check(FamilyId id, const FamilyParams &p, std::size_t n,
                             std::uint64_t seed);
CheckResult flow_rk4_check(FamilyId id, const FamilyParams &p, std::size_t n,
                           std::uint64_t seed, double tol);
/// G4: the composed flows reach the point computed by the coadjoint action.
CheckResult composition_check(const FamilyParams &p, std::size_t n, std::uint64_t seed);
/// G2, G4: orbits stay in the V1 component of their starting point.
CheckResult component_preservation_check(FamilyId id, const FamilyParams &p,
                                         std::size_t n, std::uint64_t seed);

/// Default probe grid for the family's parameters, constraint violations removed.
std::vector<FamilyParams> default_grid(FamilyId id);

} // namespace gmd

#endif
