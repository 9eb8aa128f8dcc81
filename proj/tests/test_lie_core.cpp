#include <cmath>

#include <doctest.h>

#include "gmd/catalog.hpp"
#include "gmd/errors.hpp"
#include "gmd/lie_core.hpp"

using namespace gmd;

namespace {
AlgebraElement e(int i) { return AlgebraElement::basis(i); }
bool same(const AlgebraElement &a, const Vec7 &b) { return (a.coords - b).norm() < 1e-14; }
Vec7 unit(int i) { return Vec7::Unit(i); }
} // namespace

TEST_CASE("nilradical bracket is shared by every family") {
  for (FamilyId id : all_families()) {
    const auto grid = std::vector<FamilyParams>{
        param_shape(id).lambda ? FamilyParams::with_lambda(1)
        : param_shape(id).lambda12 ? FamilyParams::with_lambdas(0, 2)
                                   : FamilyParams{}};
    const LieAlgebra7 alg = build_family(id, grid.front());
    CHECK(same(bracket(alg, e(X1), e(X2)), unit(X4)));
    CHECK(same(bracket(alg, e(X1), e(X3)), unit(X5)));
  }
}

TEST_CASE("bracket is antisymmetric") {
  const LieAlgebra7 alg = build_family(FamilyId::G13, FamilyParams::with_lambda(Rational(1, 2)));
  AlgebraElement u;
  u.coords << 0.3, -1.0, 2.0, 0.5, 0.1, 0.7, -0.2;
  CHECK(bracket(alg, u, u).coords.norm() == doctest::Approx(0.0));
}

TEST_CASE("G4 with λ1=2: [X, X3] = 2 X3") {
  const LieAlgebra7 alg = build_family(FamilyId::G4, FamilyParams::with_lambdas(2, 1));
  CHECK(same(bracket(alg, e(XX), e(X3)), 2.0 * unit(X3)));
}

TEST_CASE("Jacobi holds exactly and violations are detected") {
  CHECK(verify_jacobi(LieAlgebra7{}).ok());
  LieAlgebra7 alg = build_family(FamilyId::G5, {});
  CHECK(verify_jacobi(alg).ok());
  // Break antisymmetry of [X1,X2] on one side only.
  alg.set_raw(X2, X1, X4, Rational(1));
  const JacobiReport rep = verify_jacobi(alg);
  CHECK_FALSE(rep.ok());
  CHECK(rep.max_residual > 0);
}

TEST_CASE("ad matrix and its trace") {
  const LieAlgebra7 alg = build_family(FamilyId::G13, FamilyParams::with_lambda(2));
  CHECK(ad_matrix(alg, AlgebraElement{}).norm() == 0.0);
  AlgebraElement u;
  u.coords << 0, 0, 0, 0, 0, 0.7, 1.3;
  // ad_X = diag(0,1,1,1,1); ad_Y has trace λ + 0 + 2λ.
  CHECK(ad_matrix(alg, u).trace() == doctest::Approx(4 * 0.7 + 3 * 2.0 * 1.3));
  // ad(U) V = [U, V]
  AlgebraElement v;
  v.coords << 1, -2, 0.5, 0.25, 3, -1, 0.5;
  CHECK((ad_matrix(alg, u) * v.coords - bracket(alg, u, v).coords).norm() < 1e-13);
}

TEST_CASE("matrix exponential") {
  CHECK((exp_matrix(Matrix7::Zero()) - Matrix7::Identity()).norm() == 0.0);
  Matrix7 d = Matrix7::Zero();
  for (int i = 0; i < 7; ++i)
    d(i, i) = 0.5 * i - 1.0;
  const Matrix7 ed = exp_matrix(d);
  for (int i = 0; i < 7; ++i)
    CHECK(ed(i, i) == doctest::Approx(std::exp(0.5 * i - 1.0)).epsilon(1e-14));
  Matrix7 rot = Matrix7::Zero();
  rot(0, 1) = -M_PI / 2;
  rot(1, 0) = M_PI / 2;
  const Matrix7 er = exp_matrix(rot);
  CHECK(er(1, 0) == doctest::Approx(1.0));
  CHECK(std::abs(er(0, 0)) < 1e-14);
  // Nilpotent: exp(N) = I + N.
  Matrix7 n = Matrix7::Zero();
  n(0, 3) = 5.0;
  CHECK((exp_matrix(n) - (Matrix7::Identity() + n)).norm() < 1e-14);
  CHECK_THROWS_AS(exp_matrix(1e4 * Matrix7::Identity()), DomainError);
}

TEST_CASE("phi functions") {
  CHECK(phi1(0.0) == 1.0);
  CHECK(phi1(std::log(2.0)) == doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-15));
  CHECK(phi1_neg(0.0) == -1.0);
  CHECK(phi1(1e-9) == doctest::Approx(1.0 + 0.5e-9).epsilon(1e-16));
  CHECK(phi1(1e-4) == doctest::Approx(std::expm1(1e-4) / 1e-4).epsilon(1e-15));
}
