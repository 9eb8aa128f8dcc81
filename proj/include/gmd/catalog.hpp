#ifndef GMD_CATALOG_HPP
#define GMD_CATALOG_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gmd/lie_core.hpp"

namespace gmd {

enum class FamilyId : int {
  G1 = 1, G2, G3, G4, G5, G6, G7, G8, G9, G10, G11, G12, G13, G14, G15, G16
};

enum class ClassTag { A1, A2 };

constexpr int NUM_FAMILIES = 16;

std::string to_string(FamilyId id);
std::optional<FamilyId> parse_family(const std::string &s);
std::vector<FamilyId> all_families();
ClassTag class_of(FamilyId id);
const char *to_string(ClassTag t);

/// Which of lambda / lambda1 / lambda2 a family takes.
struct ParamShape {
  bool lambda = false;
  bool lambda12 = false;
  int arity() const { return lambda ? 1 : (lambda12 ? 2 : 0); }
};
ParamShape param_shape(FamilyId id);

struct FamilyParams {
  std::optional<Rational> lambda, lambda1, lambda2;

  double l() const { return lambda ? lambda->convert_to<double>() : 0.0; }
  double l1() const { return lambda1 ? lambda1->convert_to<double>() : 0.0; }
  double l2() const { return lambda2 ? lambda2->convert_to<double>() : 0.0; }

  static FamilyParams with_lambda(const Rational &l) { return {l, {}, {}}; }
  static FamilyParams with_lambdas(const Rational &l1, const Rational &l2) {
    return {{}, l1, l2};
  }
};

/// Human readable parameter list, e.g. "λ1=0, λ2=2".
std::string describe(const FamilyParams &p);

/// Condition strings of the family, as printed in the classification table.
std::vector<std::string> conditions(FamilyId id);

/// nullopt when the parameters are admissible, otherwise the violated
/// condition verbatim.
std::optional<std::string> validate_params(FamilyId id, const FamilyParams &p);

using Mat5 = std::array<std::array<Rational, 5>, 5>;

/// (ad_X, ad_Y, [X,Y]) restricted to the nilradical. Row j of each matrix is
/// the image of X_j.
struct TripletSpec {
  Mat5 adX{};
  Mat5 adY{};
  std::array<Rational, 5> xy{};
};

TripletSpec triplet(FamilyId id, const FamilyParams &p);

/// Throws ConstraintViolation when validate_params fails.
LieAlgebra7 build_family(FamilyId id, const FamilyParams &p);

struct FamilyInfo {
  FamilyId id;
  int arity;
  ClassTag class_tag;
  std::string nilradical;
  std::vector<std::string> conditions;
};

std::vector<FamilyInfo> list_families();

} // namespace gmd

#endif
