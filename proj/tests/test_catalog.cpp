#include <doctest.h>

#include "gmd/catalog.hpp"
#include "gmd/errors.hpp"
#include "gmd/lie_core.hpp"

using namespace gmd;

TEST_CASE("sixteen families with their metadata") {
  const auto rows = list_families();
  CHECK(rows.size() == 16);
  CHECK(class_of(FamilyId::G13) == ClassTag::A2);
  CHECK(class_of(FamilyId::G12) == ClassTag::A1);
  CHECK(param_shape(FamilyId::G7).arity() == 0);
  CHECK(param_shape(FamilyId::G4).arity() == 2);
  CHECK(param_shape(FamilyId::G16).arity() == 1);
  for (const auto &r : rows)
    CHECK(r.nilradical == "g_{5,2}");
  CHECK(conditions(FamilyId::G13) == std::vector<std::string>{"λ ≥ 0"});
}

TEST_CASE("family names parse both ways") {
  CHECK(parse_family("G4") == FamilyId::G4);
  CHECK(parse_family("g16") == FamilyId::G16);
  CHECK_FALSE(parse_family("G17").has_value());
  CHECK_FALSE(parse_family("x").has_value());
  CHECK(to_string(FamilyId::G11) == "G11");
}

TEST_CASE("parameter constraints") {
  const auto g4 = validate_params(FamilyId::G4, FamilyParams::with_lambdas(-1, 0));
  REQUIRE(g4.has_value());
  CHECK(g4->find("(λ1,λ2) ≠ (−1,0)") != std::string::npos);
  const auto g4b = validate_params(FamilyId::G4, FamilyParams::with_lambdas(1, 2));
  REQUIRE(g4b.has_value());
  CHECK(g4b->find("λ1+1 ≠ λ2") != std::string::npos);
  const auto g12 = validate_params(FamilyId::G12, FamilyParams::with_lambda(-1));
  REQUIRE(g12.has_value());
  CHECK(g12->find("λ ∈ R \\ {−1}") != std::string::npos);
  CHECK_FALSE(validate_params(FamilyId::G2, {}).has_value());
  CHECK(validate_params(FamilyId::G1, FamilyParams::with_lambda(Rational(1, 2))).has_value());
  CHECK(validate_params(FamilyId::G13, FamilyParams::with_lambda(-1)).has_value());
  CHECK(validate_params(FamilyId::G14, FamilyParams::with_lambdas(0, -1)).has_value());
  CHECK(validate_params(FamilyId::G14, FamilyParams::with_lambdas(-1, 1)).has_value());
  CHECK(validate_params(FamilyId::G2, FamilyParams::with_lambda(1)).has_value());
  CHECK(validate_params(FamilyId::G6, {}).has_value());
  CHECK_THROWS_AS(build_family(FamilyId::G12, FamilyParams::with_lambda(-1)),
                  ConstraintViolation);
}

TEST_CASE("brackets from the catalog") {
  const LieAlgebra7 g5 = build_family(FamilyId::G5, {});
  const RVec7 yx1 = bracket_exact(g5, RVec7{0, 0, 0, 0, 0, 0, 1}, RVec7{1, 0, 0, 0, 0, 0, 0});
  CHECK(yx1 == RVec7{1, 1, 0, 0, 0, 0, 0});

  const LieAlgebra7 g13 = build_family(FamilyId::G13, FamilyParams::with_lambda(3));
  CHECK(bracket_exact(g13, RVec7{0, 0, 0, 0, 0, 0, 1}, RVec7{0, 1, 0, 0, 0, 0, 0}) ==
        RVec7{0, 0, 1, 0, 0, 0, 0});

  const LieAlgebra7 g1 = build_family(FamilyId::G1, FamilyParams::with_lambda(1));
  CHECK(bracket_exact(g1, RVec7{0, 0, 0, 0, 0, 1, 0}, RVec7{0, 0, 0, 0, 0, 0, 1}) ==
        RVec7{0, 0, 0, 1, 0, 0, 0});
  const LieAlgebra7 g10 = build_family(FamilyId::G1, FamilyParams::with_lambda(0));
  CHECK(bracket_exact(g10, RVec7{0, 0, 0, 0, 0, 1, 0}, RVec7{0, 0, 0, 0, 0, 0, 1}) == RVec7{});
}
