#ifndef GMD_LIE_CORE_HPP
#define GMD_LIE_CORE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace gmd {

using Rational = boost::multiprecision::cpp_rational;
using Vec7 = Eigen::Matrix<double, 7, 1>;
using Matrix7 = Eigen::Matrix<double, 7, 7>;
using RVec7 = std::array<Rational, 7>;

constexpr int DIM = 7;

/// Basis indices: X1..X5, X, Y.
enum Basis : int { X1 = 0, X2, X3, X4, X5, XX, YY };

extern const std::array<const char *, DIM> basis_labels;

/// Element U = sum x_i X_i + x X + y Y.
struct AlgebraElement {
  Vec7 coords = Vec7::Zero();

  static AlgebraElement basis(int i);
};

/// 7-dimensional Lie algebra given by exact structure constants
/// [e_i, e_j] = sum_k c[i][j][k] e_k.
class LieAlgebra7 {
public:
  LieAlgebra7() = default;
  explicit LieAlgebra7(std::string tag) : tag_(std::move(tag)) {}

  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(int i, int j, const RVec7 &v);
  /// Writes a single constant without touching its mirror (used to build
  /// deliberately broken algebras).
  void set_raw(int i, int j, int k, const Rational &value);

  const Rational &c(int i, int j, int k) const { return c_[idx(i, j, k)]; }
  double cd(int i, int j, int k) const { return cd_[idx(i, j, k)]; }

  const std::optional<std::string> &family_tag() const { return tag_; }

private:
  static constexpr int idx(int i, int j, int k) { return (i * DIM + j) * DIM + k; }

  std::array<Rational, DIM * DIM * DIM> c_{};
  std::array<double, DIM * DIM * DIM> cd_{};
  std::optional<std::string> tag_;
};

struct JacobiReport {
  Rational max_residual = 0;
  std::vector<std::array<int, 3>> violations;

  bool ok() const { return violations.empty(); }
};

AlgebraElement bracket(const LieAlgebra7 &alg, const AlgebraElement &u,
                       const AlgebraElement &v);
RVec7 bracket_exact(const LieAlgebra7 &alg, const RVec7 &u, const RVec7 &v);

/// Cyclic sums over all basis triples i<j<k, in exact arithmetic.
JacobiReport verify_jacobi(const LieAlgebra7 &alg);

/// Column j holds the coordinates of [u, e_j].
Matrix7 ad_matrix(const LieAlgebra7 &alg, const AlgebraElement &u);

/// Scaling and squaring with a degree-18 Taylor core. Throws DomainError
/// when the result is not finite.
Matrix7 exp_matrix(const Matrix7 &m);

/// (e^x - 1)/x, equal to 1 at 0.
double phi1(double x);
/// (1 - e^x)/x, equal to -1 at 0.
double phi1_neg(double x);

} // namespace gmd

#endif
