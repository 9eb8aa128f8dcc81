#include "gmd/lie_core.hpp"

#include <cmath>

#include "gmd/errors.hpp"

namespace gmd {

const std::array<const char *, DIM> basis_labels = {"X1", "X2", "X3", "X4",
                                                    "X5", "X",  "Y"};

AlgebraElement AlgebraElement::basis(int i) {
  AlgebraElement e;
  e.coords(i) = 1.0;
  return e;
}

void LieAlgebra7::set_bracket(int i, int j, const RVec7 &v) {
  for (int k = 0; k < DIM; ++k) {
    set_raw(i, j, k, v[k]);
    set_raw(j, i, k, -v[k]);
  }
}

void LieAlgebra7::set_raw(int i, int j, int k, const Rational &value) {
  c_[idx(i, j, k)] = value;
  cd_[idx(i, j, k)] = value.convert_to<double>();
}

AlgebraElement bracket(const LieAlgebra7 &alg, const AlgebraElement &u,
                       const AlgebraElement &v) {
  AlgebraElement w;
  for (int i = 0; i < DIM; ++i) {
    if (u.coords(i) == 0.0)
      continue;
    for (int j = 0; j < DIM; ++j) {
      const double uv = u.coords(i) * v.coords(j);
      if (uv == 0.0)
        continue;
      for (int k = 0; k < DIM; ++k)
        w.coords(k) += uv * alg.cd(i, j, k);
    }
  }
  return w;
}

RVec7 bracket_exact(const LieAlgebra7 &alg, const RVec7 &u, const RVec7 &v) {
  RVec7 w{};
  for (int i = 0; i < DIM; ++i) {
    if (u[i] == 0)
      continue;
    for (int j = 0; j < DIM; ++j) {
      if (v[j] == 0)
        continue;
      const Rational uv = u[i] * v[j];
      for (int k = 0; k < DIM; ++k)
        if (alg.c(i, j, k) != 0)
          w[k] += uv * alg.c(i, j, k);
    }
  }
  return w;
}

JacobiReport verify_jacobi(const LieAlgebra7 &alg) {
  auto e = [](int i) {
    RVec7 v{};
    v[i] = 1;
    return v;
  };
  auto br = [&](const RVec7 &a, const RVec7 &b) { return bracket_exact(alg, a, b); };

  JacobiReport rep;
  for (int i = 0; i < DIM; ++i)
    for (int j = i + 1; j < DIM; ++j)
      for (int k = j + 1; k < DIM; ++k) {
        const RVec7 a = br(e(i), br(e(j), e(k)));
        const RVec7 b = br(e(j), br(e(k), e(i)));
        const RVec7 c = br(e(k), br(e(i), e(j)));
        Rational worst = 0;
        for (int m = 0; m < DIM; ++m) {
          Rational s = a[m] + b[m] + c[m];
          if (s < 0)
            s = -s;
          if (s > worst)
            worst = s;
        }
        if (worst != 0)
          rep.violations.push_back({i, j, k});
        if (worst > rep.max_residual)
          rep.max_residual = worst;
      }
  return rep;
}

Matrix7 ad_matrix(const LieAlgebra7 &alg, const AlgebraElement &u) {
  Matrix7 ad = Matrix7::Zero();
  for (int i = 0; i < DIM; ++i) {
    if (u.coords(i) == 0.0)
      continue;
    for (int j = 0; j < DIM; ++j)
      for (int k = 0; k < DIM; ++k)
        ad(k, j) += u.coords(i) * alg.cd(i, j, k);
  }
  return ad;
}

Matrix7 exp_matrix(const Matrix7 &m) {
  if (!m.allFinite())
    throw DomainError("exp_matrix: non-finite input");

  const double norm = m.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  double scaled = norm;
  while (scaled >= 0.5) {
    scaled *= 0.5;
    ++squarings;
  }
  const Matrix7 a = m * std::ldexp(1.0, -squarings);

  // Horner form of sum_{k<=18} a^k/k!
  Matrix7 r = Matrix7::Identity();
  for (int k = 18; k >= 1; --k)
    r = Matrix7::Identity() + (a * r) / static_cast<double>(k);

  for (int s = 0; s < squarings; ++s) {
    r = r * r;
    if (!r.allFinite())
      throw DomainError("exp_matrix: overflow");
  }
  if (!r.allFinite())
    throw DomainError("exp_matrix: overflow");
  return r;
}

double phi1(double x) {
  if (std::abs(x) < 1e-4) {
    // sum_{k=0}^{7} x^k/(k+1)!
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 8; ++k) {
      term *= x / (k + 1);
      sum += term;
    }
    return sum;
  }
  return std::expm1(x) / x;
}

double phi1_neg(double x) { return -phi1(x); }

} // namespace gmd
