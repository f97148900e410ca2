#pragma once

/// Small dense kernels shared by the whole library: the matrix exponential,
/// norms, determinants and group-membership residuals. The exponential is the
/// ground truth every closed form is checked against, so it is implemented
/// here from scratch (scaling and squaring with diagonal Pade kernels) rather
/// than pulled from an external matrix-functions package.

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "cusphere/types.hpp"

namespace cusphere {

/// Max absolute row sum.
template <typename Derived>
double inf_norm(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

/// Max absolute column sum.
template <typename Derived>
double one_norm(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

/// Largest absolute entry.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

/// Determinant via partially pivoted elimination.
template <typename Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& m) {
  return m.determinant();
}

/// ‖MᵀM − I‖∞, the distance from the real orthogonal group.
template <typename Derived>
double residual_orthogonal(const Eigen::MatrixBase<Derived>& m) {
  using Plain = typename Derived::PlainObject;
  const Plain gram = m.transpose() * m;
  return inf_norm(gram - Plain::Identity(m.rows(), m.cols()));
}

/// ‖M†M − I‖∞, the distance from the unitary group.
template <typename Derived>
double residual_unitary(const Eigen::MatrixBase<Derived>& m) {
  using Plain = typename Derived::PlainObject;
  const Plain gram = m.adjoint() * m;
  return inf_norm(gram - Plain::Identity(m.rows(), m.cols()));
}

/// Singular values, descending.
template <typename Derived>
Eigen::VectorXd singular_values(const Eigen::MatrixBase<Derived>& m) {
  Eigen::JacobiSVD<typename Derived::PlainObject> svd(m.derived());
  return svd.singularValues().template cast<double>();
}

namespace detail {

// Diagonal Pade coefficient tables (numerator b_0..b_m; the denominator is
// the same with alternating signs, folded in below via V - U).
inline constexpr double kPade3[] = {120., 60., 12., 1.};
inline constexpr double kPade5[] = {30240., 15120., 3360., 420., 30., 1.};
inline constexpr double kPade7[] = {17297280., 8648640., 1995840., 277200.,
                                    25200.,    1512.,    56.,      1.};
inline constexpr double kPade9[] = {17643225600., 8821612800., 2075673600.,
                                    302702400.,   30270240.,   2162160.,
                                    110880.,      3960.,       90.,
                                    1.};
inline constexpr double kPade13[] = {64764752532480000., 32382376266240000.,
                                     7771770303897600.,  1187353796428800.,
                                     129060195264000.,   10559470521600.,
                                     670442572800.,      33522128640.,
                                     1323241920.,        40840800.,
                                     960960.,            16380.,
                                     182.,               1.};

// 1-norm bounds under which each Pade order meets double-precision accuracy.
inline constexpr double kTheta3 = 1.495585217958292e-2;
inline constexpr double kTheta5 = 2.539398330063230e-1;
inline constexpr double kTheta7 = 9.504178996162932e-1;
inline constexpr double kTheta9 = 2.097847961257068e0;
inline constexpr double kTheta13 = 5.371920351148152e0;

// U (odd powers, premultiplied by a) and V (even powers) for orders 3..9.
template <typename Mat>
void pade_uv_low(const Mat& a, const double* b, int order, Mat& u, Mat& v) {
  const Eigen::Index n = a.rows();
  const Mat ident = Mat::Identity(n, n);
  const Mat a2 = a * a;
  Mat even = ident * b[0];
  Mat odd = ident * b[1];
  Mat power = ident;
  for (int k = 2; k <= order; k += 2) {
    power = (power * a2).eval();
    even += power * b[k];
    if (k + 1 <= order) odd += power * b[k + 1];
  }
  u = a * odd;
  v = even;
}

template <typename Mat>
void pade_uv_13(const Mat& a, Mat& u, Mat& v) {
  const double* b = kPade13;
  const Eigen::Index n = a.rows();
  const Mat ident = Mat::Identity(n, n);
  const Mat a2 = a * a;
  const Mat a4 = a2 * a2;
  const Mat a6 = a4 * a2;
  u = a * (a6 * (a6 * b[13] + a4 * b[11] + a2 * b[9]) + a6 * b[7] +
           a4 * b[5] + a2 * b[3] + ident * b[1]);
  v = a6 * (a6 * b[12] + a4 * b[10] + a2 * b[8]) + a6 * b[6] + a4 * b[4] +
      a2 * b[2] + ident * b[0];
}

}  // namespace detail

/// Matrix exponential by scaling and squaring. Entrywise accurate to roughly
/// 1e-13 relative for ‖M‖∞ up to ~20. Inputs must be finite; a result that
/// leaves the double range is reported as std::overflow_error rather than
/// returned as inf/NaN.
template <typename Derived>
typename Derived::PlainObject expm(const Eigen::MatrixBase<Derived>& arg) {
  using Mat = typename Derived::PlainObject;
  using Scalar = typename Derived::Scalar;
  static_assert(std::is_floating_point_v<Scalar> || is_complex_v<Scalar>,
                "expm requires a floating-point or complex scalar");
  Mat a = arg.derived();
  if (a.rows() != a.cols()) throw std::invalid_argument("expm: matrix must be square");
  if (!a.allFinite()) throw std::invalid_argument("expm: non-finite input");

  using detail::pade_uv_13;
  using detail::pade_uv_low;

  const double norm = one_norm(a);
  Mat u, v;
  int squarings = 0;
  if (norm <= detail::kTheta3) {
    pade_uv_low(a, detail::kPade3, 3, u, v);
  } else if (norm <= detail::kTheta5) {
    pade_uv_low(a, detail::kPade5, 5, u, v);
  } else if (norm <= detail::kTheta7) {
    pade_uv_low(a, detail::kPade7, 7, u, v);
  } else if (norm <= detail::kTheta9) {
    pade_uv_low(a, detail::kPade9, 9, u, v);
  } else {
    squarings = std::max(0, static_cast<int>(
                                std::ceil(std::log2(norm / detail::kTheta13))));
    a *= std::ldexp(1.0, -squarings);  // exact power-of-two scaling
    pade_uv_13(a, u, v);
  }

  const Mat numer = v + u;
  const Mat denom = v - u;
  Mat result = denom.partialPivLu().solve(numer);
  for (int i = 0; i < squarings; ++i) result = (result * result).eval();
  if (!result.allFinite()) throw std::overflow_error("expm: result overflowed");
  return result;
}

}  // namespace cusphere
