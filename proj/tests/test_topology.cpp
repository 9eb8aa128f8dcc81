#include <doctest.h>

#include "gmd/errors.hpp"
#include "gmd/topology.hpp"

using namespace gmd;

namespace {
OrbitPoint pt(std::initializer_list<double> v) {
  OrbitPoint p;
  int i = 0;
  for (double x : v)
    p.coords(i++) = x;
  return p;
}
} // namespace

TEST_CASE("foliated manifolds") {
  CHECK(manifold_of(FamilyId::G7) == FoliatedManifold::V1);
  CHECK(manifold_of(FamilyId::G12) == FoliatedManifold::V2);
  CHECK(manifold_of(FamilyId::G15) == FoliatedManifold::V3);
  CHECK(component_count(FoliatedManifold::V1) == 4);
  CHECK(component_of(pt({1, 1, 1, 1, 1, 0, 0}), FoliatedManifold::V1) == "++");
  CHECK(component_of(pt({1, 1, 1, -1, 2, 0, 0}), FoliatedManifold::V1) == "-+");
  CHECK_THROWS_AS(component_of(pt({1, 1, 1, 0, 2, 0, 0}), FoliatedManifold::V1), DomainError);
  CHECK(in_manifold(pt({0, 0, 0, 0, 1, 0, 0}), FoliatedManifold::V3));
  CHECK_FALSE(in_manifold(pt({0, 0, 0, 0, 0, 0, 0}), FoliatedManifold::V3));
}

TEST_CASE("classification") {
  int counts[3] = {0, 0, 0};
  for (FamilyId id : all_families())
    ++counts[static_cast<int>(classify(id))];
  CHECK(counts[0] == 11);
  CHECK(counts[1] == 1);
  CHECK(counts[2] == 4);
  CHECK(classify(FamilyId::G2) == FoliationType::F1);
  CHECK(classify(FamilyId::G12) == FoliationType::F2);
  CHECK(classify(FamilyId::G16) == FoliationType::F3);
  CHECK(cstar_descriptor(FoliationType::F1) == "(C0(R)^⊕4) ⊗ K");
  CHECK(cstar_descriptor(FoliationType::F2) == "(C0(R)^⊕2) ⊗ K");
  CHECK(cstar_descriptor(FoliationType::F3) == "C0(R) ⊗ K");
}

TEST_CASE("h2 and h8 reduce to the identity") {
  const Homeomorphism h2 = make_homeomorphism(HMap::h2, FamilyParams::with_lambdas(1, 3));
  const OrbitPoint v = pt({0.2, -1, 3, 1, 1, 0.5, 0.6});
  CHECK((apply_h(h2, v).coords - v.coords).norm() < 1e-15);
  const Homeomorphism h8 = make_homeomorphism(HMap::h8, FamilyParams::with_lambda(0));
  const OrbitPoint w = pt({0.2, -1, 3, -0.4, 1.3, 0.5, 0.6});
  CHECK((apply_h(h8, w).coords - w.coords).norm() < 1e-15);
}

TEST_CASE("every h map inverts") {
  for (HMap h : all_hmaps()) {
    const FamilyParams p = (h == HMap::h2 || h == HMap::h9) ? FamilyParams::with_lambdas(1, 1)
                           : (h == HMap::h1)                ? FamilyParams::with_lambda(1)
                           : (h == HMap::h4 || h == HMap::h6 || h == HMap::h7 ||
                              h == HMap::h8 || h == HMap::h11)
                               ? FamilyParams::with_lambda(Rational(1, 2))
                               : FamilyParams{};
    CAPTURE(to_string(h));
    CHECK(round_trip_check(make_homeomorphism(h, p), 200, 5).passed);
  }
}

TEST_CASE("h parameters are validated against the target") {
  CHECK_THROWS_AS(make_homeomorphism(HMap::h2, FamilyParams::with_lambdas(-1, 0)),
                  ConstraintViolation);
  CHECK_THROWS_AS(make_homeomorphism(HMap::h7, FamilyParams::with_lambda(-1)),
                  ConstraintViolation);
}

TEST_CASE("leaf maps with printed invariants on both sides") {
  CHECK(verify_leaf_map(make_homeomorphism(HMap::h2, FamilyParams::with_lambdas(0, 2)), 100, 1)
            .passed);
  CHECK(verify_leaf_map(make_homeomorphism(HMap::h7, FamilyParams::with_lambda(2)), 100, 1)
            .passed);
  CHECK(verify_leaf_map(make_homeomorphism(HMap::h8, FamilyParams::with_lambda(1)), 100, 1)
            .passed);
}

TEST_CASE("fibrations are submersions") {
  for (FoliationType t : {FoliationType::F1, FoliationType::F2, FoliationType::F3})
    CHECK(fibration_check(t, 100, 3).passed);
}
