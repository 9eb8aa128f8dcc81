#include <cmath>

#include <doctest.h>

#include "gmd/catalog.hpp"
#include "gmd/coadjoint.hpp"
#include "gmd/rng.hpp"

using namespace gmd;

namespace {
Functional fn(std::initializer_list<double> v) {
  Functional f;
  int i = 0;
  for (double x : v)
    f.coords(i++) = x;
  return f;
}
AlgebraElement xy(double x, double y) {
  AlgebraElement u;
  u.coords(XX) = x;
  u.coords(YY) = y;
  return u;
}
const FamilyParams g4p = FamilyParams::with_lambdas(0, 2);
} // namespace

TEST_CASE("numeric rank") {
  CHECK(numeric_rank(Matrix7::Zero()) == 0);
  CHECK(numeric_rank(Matrix7::Identity()) == 7);
  const LieAlgebra7 g4 = build_family(FamilyId::G4, g4p);
  CHECK(numeric_rank(kirillov_form(g4, fn({0, 0, 0, 1, 1, 0, 0}))) == 6);
  CHECK(kirillov_form(g4, Functional{}).norm() == 0.0);
}

TEST_CASE("Kirillov form is antisymmetric and pairs F with brackets") {
  const LieAlgebra7 alg = build_family(FamilyId::G14, FamilyParams::with_lambdas(1, 2));
  const Functional f = fn({0.3, -1, 2, 0.5, 1.5, 0.2, -0.7});
  const Matrix7 b = kirillov_form(alg, f);
  CHECK((b + b.transpose()).norm() == 0.0);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      CHECK(b(i, j) ==
            doctest::Approx(f.coords.dot(
                bracket(alg, AlgebraElement::basis(i), AlgebraElement::basis(j)).coords)));
}

TEST_CASE("printed rank conditions") {
  CHECK(rank_condition(FamilyId::G4, g4p, fn({0, 1, 0, 0, 1, 0, 0})));
  CHECK_FALSE(rank_condition(FamilyId::G13, FamilyParams::with_lambda(1),
                             fn({1, 1, 1, 0, 0, 0, 0})));
  CHECK_FALSE(rank_condition(FamilyId::G7, {}, fn({1, 1, 0, 1, 0, 0, 0})));
  CHECK_FALSE(has_rank_condition(FamilyId::G9));
}

TEST_CASE("coadjoint action") {
  const LieAlgebra7 g4 = build_family(FamilyId::G4, g4p);
  const Functional f = fn({0, 0, 0, 1, 1, 0, 0});
  CHECK((coadjoint_act(g4, AlgebraElement{}, f).coords - f.coords).norm() == 0.0);
  const OrbitPoint p = coadjoint_act(g4, xy(std::log(2.0), 0), f);
  Vec7 want;
  want << 0, 0, 0, 2, 2, 0, 0;
  CHECK((p.coords - want).norm() < 1e-13);

  const LieAlgebra7 g12 = build_family(FamilyId::G12, FamilyParams::with_lambda(0));
  const OrbitPoint q = coadjoint_act(g12, xy(0, 1), fn({0, 0, 0, 0, 1, 0, 0}));
  CHECK(q.coords(X4) == doctest::Approx(std::exp(1.0)));
  CHECK(q.coords(X5) == doctest::Approx(std::exp(1.0)));
}

TEST_CASE("coadjoint action is a group action") {
  const LieAlgebra7 alg = build_family(FamilyId::G16, FamilyParams::with_lambda(1));
  const Functional f = fn({0.3, -1, 2, 0.5, 1.5, 0.2, -0.7});
  AlgebraElement u = sample_element(7, 0, 1.0);
  AlgebraElement v;
  v.coords = 0.37 * u.coords;
  AlgebraElement w;
  w.coords = 0.63 * u.coords;
  const OrbitPoint a = coadjoint_act(alg, u, f);
  const OrbitPoint b = coadjoint_act(alg, v, coadjoint_act(alg, w, f).as_functional());
  CHECK((a.coords - b.coords).norm() < 1e-12);
}

TEST_CASE("orbit sampling is reproducible and continuous at U=0") {
  const LieAlgebra7 alg = build_family(FamilyId::G4, g4p);
  const Functional f = fn({1, 1, 1, 1, 1, 0, 0});
  const auto a = sample_orbit(alg, f, 5, 42);
  const auto b = sample_orbit(alg, f, 5, 42);
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(a[i].coords == b[i].coords);
  const auto tiny = sample_orbit(alg, f, 1, 42, 1e-12);
  CHECK((tiny[0].coords - f.coords).norm() < 1e-10);
}

TEST_CASE("orbit types") {
  CHECK(orbit_type(FamilyId::G4, g4p, fn({1, 1, 1, 0, 1, 0, 0})) ==
        OrbitType::Type1MaxNonGeneric);
  CHECK(orbit_type(FamilyId::G4, g4p, fn({1, 1, 1, 1, 1, 0, 0})) == OrbitType::Generic);
  CHECK(orbit_type(FamilyId::G4, g4p, Functional{}) == OrbitType::LowerDimensional);
}

TEST_CASE("Jacobian of the action") {
  const LieAlgebra7 alg = build_family(FamilyId::G8, FamilyParams::with_lambda(2));
  const JacobianCheck zero = jacobian_check(alg, AlgebraElement{});
  CHECK(zero.det_of_action == doctest::Approx(1.0));
  CHECK(zero.exp_trace == doctest::Approx(1.0));
  const JacobianCheck j = jacobian_check(alg, sample_element(3, 1, 1.5));
  CHECK(j.det_of_action == doctest::Approx(j.exp_trace).epsilon(1e-10));
}

TEST_CASE("counter RNG streams") {
  CounterRng a(1, {2, 3}), b(1, {2, 3}), c(1, {2, 4});
  const auto x = a.next();
  CHECK(x == b.next());
  CHECK(x != c.next());
  CHECK(tag("abc") != tag("abd"));
  for (int i = 0; i < 100; ++i) {
    const double u = a.uniform(-2, 3);
    CHECK(u >= -2);
    CHECK(u < 3);
  }
}
