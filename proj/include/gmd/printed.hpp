#ifndef GMD_PRINTED_HPP
#define GMD_PRINTED_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "gmd/catalog.hpp"
#include "gmd/coadjoint.hpp"
#include "gmd/report.hpp"

namespace gmd {

using RMat7 = std::array<std::array<Rational, 7>, 7>;

/// Families whose Kirillov matrix is printed in closed form.
bool has_printed_kirillov(FamilyId id);

/// The printed B_F, transcribed entry by entry. G1 is printed with the
/// (X, Y) entry equal to α4, i.e. for λ = 1.
RMat7 printed_kirillov(FamilyId id, const FamilyParams &p, const RVec7 &f);

/// B_F from the structure constants, exactly.
RMat7 exact_kirillov(const LieAlgebra7 &alg, const RVec7 &f);

struct CellMismatch {
  int row, col;
  RVec7 printed;   // coefficients of the printed entry in α1..α5, α, β
  RVec7 computed;
  bool self_inconsistent;  // printed(i,j) != -printed(j,i) while the mirror agrees
};

/// Coefficient-wise comparison against the printed matrix. Residual counts
/// mismatching cells that are not explained by a self-inconsistent printed
/// entry; those are listed in the note.
CheckResult golden_kirillov_check(FamilyId id, const FamilyParams &p,
                                  std::vector<CellMismatch> *mismatches = nullptr);

bool has_printed_exp(FamilyId id);

struct PrintedEntry {
  int row, col;
  double value;
};

/// Fully printed entries of exp(ad_U), column convention.
std::vector<PrintedEntry> printed_exp_entries(FamilyId id, const FamilyParams &p,
                                              const AlgebraElement &u);

/// Relative error |num - printed| / max(1, |printed|) over n random U.
CheckResult printed_exp_check(FamilyId id, const FamilyParams &p, std::size_t n,
                              std::uint64_t seed, double radius = 1.5);

/// Printed closed forms of the orbit coordinates x*_i of F_U (G4: x*_1..x*_5;
/// G12, G13: x*_2..x*_5). G13's "α_45" is read as α5.
std::vector<std::pair<int, double>> printed_coordinates(FamilyId id, const FamilyParams &p,
                                                        const AlgebraElement &u,
                                                        const Functional &f);

CheckResult printed_coordinates_check(FamilyId id, const FamilyParams &p, std::size_t n,
                                      std::uint64_t seed, double radius = 1.5);

} // namespace gmd

#endif
