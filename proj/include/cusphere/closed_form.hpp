#pragma once

/// Closed forms of the exponentiated generators: the 6x6 rotation matrix, its
/// 3x3 complex (U(3)) counterpart, the claimed spectrum and the block
/// embedding that ties the two together. Everything is a function of two
/// trigonometric arguments,
///
///   r = sqrt(x^2 + y^2 + z^2 - xy - yz - zx),   gamma = x + y + z,
///
/// plus the radial direction coefficients p = (dr/dx, dr/dy, dr/dz). All
/// functions accept real or complex scalars; complex angles analytically
/// continue the forms with the principal branch of r.

#include <array>
#include <cmath>

#include "cusphere/generators.hpp"
#include "cusphere/numerics.hpp"
#include "cusphere/types.hpp"

namespace cusphere {

/// Below this |r| the p-ratios are 0/0 noise (x = y = z is the degenerate
/// axis) and evaluation switches to the series form of sin(r)/r.
inline constexpr double kDegenerateRadius = 1e-6;

/// Trigonometric arguments of the closed forms. nx, ny, nz are the numerators
/// of the p coefficients (p = n / r): they stay finite and accurate on the
/// degenerate axis, where the ratios themselves blow up. The sine slots of
/// every closed form are therefore assembled as n * sinc(r), never p * sin(r).
template <typename Scalar>
struct SphericalArgs {
  Scalar r{};
  Scalar gamma{};
  Scalar px{}, py{}, pz{};  // zero when degenerate
  Scalar nx{}, ny{}, nz{};
  bool degenerate = false;
};

/// sin(r)/r, with a 4-term series once |r| is below the degeneracy threshold.
template <typename Scalar>
Scalar sinc(const Scalar& r) {
  using std::abs;
  if (abs(r) < kDegenerateRadius) {
    const Scalar r2 = r * r;
    return Scalar(1) - r2 / 6.0 + r2 * r2 / 120.0 - r2 * r2 * r2 / 5040.0;
  }
  using std::sin;
  return sin(r) / r;
}

/// The quadratic form under r is evaluated from pairwise differences,
/// ((x-y)^2 + (y-z)^2 + (z-x)^2) / 2, which keeps full precision near the
/// degenerate axis where the expanded polynomial cancels catastrophically.
template <typename Scalar>
SphericalArgs<Scalar> spherical_args(const Scalar& x, const Scalar& y,
                                     const Scalar& z) {
  using std::abs;
  using std::sqrt;
  SphericalArgs<Scalar> args;
  const Scalar dxy = x - y, dyz = y - z, dzx = z - x;
  const Scalar q = (dxy * dxy + dyz * dyz + dzx * dzx) / 2.0;
  args.r = sqrt(q);  // principal branch for complex q; q >= 0 for real angles
  args.gamma = x + y + z;
  args.nx = (dxy - dzx) / 2.0;
  args.ny = (dyz - dxy) / 2.0;
  args.nz = (dzx - dyz) / 2.0;
  args.degenerate = abs(args.r) < kDegenerateRadius;
  if (!args.degenerate) {
    args.px = args.nx / args.r;
    args.py = args.ny / args.r;
    args.pz = args.nz / args.r;
  }
  return args;
}

/// Assembles the 6x6 rotation matrix from precomputed arguments. Even in r:
/// negating args.r (with the matching p sign flip) leaves the result
/// unchanged, so the branch of the square root is immaterial.
template <typename Scalar>
Mat6<Scalar> group_matrix(const SphericalArgs<Scalar>& args) {
  using std::cos;
  using std::sin;
  const Scalar cos_r = cos(args.r);
  const Scalar cos_g = cos(args.gamma);
  const Scalar sin_g3 = sin(args.gamma) / 3.0;
  const Scalar sinc_r23 = sinc(args.r) * (2.0 / 3.0);

  const Scalar diag = (2.0 * cos_r + cos_g) / 3.0;   // diagonal slots
  const Scalar cross = (cos_g - cos_r) / 3.0;        // cosine off-slots
  const Scalar sx = args.nx * sinc_r23 + sin_g3;     // odd-row sine slots
  const Scalar sy = args.ny * sinc_r23 + sin_g3;
  const Scalar sz = args.nz * sinc_r23 + sin_g3;

  Mat6<Scalar> g;
  g << diag, sx, cross, sz, cross, sy,
      -sx, diag, -sz, cross, -sy, cross,
      cross, sz, diag, sy, cross, sx,
      -sz, cross, -sy, diag, -sx, cross,
      cross, sy, cross, sx, diag, sz,
      -sy, cross, -sx, cross, -sz, diag;
  return g;
}

template <typename Scalar>
Mat6<Scalar> group_matrix(const Scalar& x, const Scalar& y, const Scalar& z) {
  return group_matrix(spherical_args(x, y, z));
}

/// Row/column sum identity: in every line of the matrix the cosine slots sum
/// to cos(gamma) and the sine slots to ±sin(gamma) (+ for odd rows and even
/// columns, − otherwise). Returns the max deviation over all 12 lines.
template <typename Scalar>
double row_sum_identity(const Scalar& x, const Scalar& y, const Scalar& z) {
  using std::abs;
  using std::cos;
  using std::sin;
  const SphericalArgs<Scalar> args = spherical_args(x, y, z);
  const Mat6<Scalar> g = group_matrix(args);
  const Scalar cos_g = cos(args.gamma);
  const Scalar sin_g = sin(args.gamma);

  double worst = 0.0;
  for (int i = 0; i < 6; ++i) {
    Scalar row_cos(0), row_sin(0), col_cos(0), col_sin(0);
    for (int j = 0; j < 6; ++j) {
      ((i + j) % 2 == 0 ? row_cos : row_sin) += g(i, j);
      ((i + j) % 2 == 0 ? col_cos : col_sin) += g(j, i);
    }
    const double row_sign = (i % 2 == 0) ? 1.0 : -1.0;  // odd rows, 1-indexed
    const double col_sign = -row_sign;
    worst = std::max<double>(worst, abs(row_cos - cos_g));
    worst = std::max<double>(worst, abs(col_cos - cos_g));
    worst = std::max<double>(worst, abs(row_sign * row_sin - sin_g));
    worst = std::max<double>(worst, abs(col_sign * col_sin - sin_g));
  }
  return worst;
}

/// Claimed eigenvalues: e^{-ir} and e^{ir} twice each, e^{-i gamma} and
/// e^{i gamma} once. Their product is 1 and their sum equals the trace.
using Spectrum = std::array<Complex, 6>;

template <typename Scalar>
Spectrum claimed_spectrum(const Scalar& x, const Scalar& y, const Scalar& z) {
  const SphericalArgs<Scalar> args = spherical_args(x, y, z);
  const Complex i(0.0, 1.0);
  const Complex r = to_complex(args.r);
  const Complex gamma = to_complex(args.gamma);
  return {std::exp(-i * r), std::exp(-i * r), std::exp(i * r),
          std::exp(i * r),  std::exp(-i * gamma), std::exp(i * gamma)};
}

/// Spectrum verification without an eigensolver: each claimed eigenvalue must
/// annihilate the characteristic determinant, and the sum/product must match
/// trace and determinant.
struct SpectrumReport {
  std::array<double, 6> det_residuals{};  // |det(G - λI)|
  double sum_residual = 0.0;              // |Σλ − trace(G)|
  double product_residual = 0.0;          // |Πλ − det(G)|

  double max_det_residual() const {
    double worst = 0.0;
    for (double v : det_residuals) worst = std::max(worst, v);
    return worst;
  }
};

template <typename Scalar>
SpectrumReport verify_spectrum(const Scalar& x, const Scalar& y, const Scalar& z) {
  const ComplexMat6 g = [&] {
    if constexpr (is_complex_v<Scalar>)
      return group_matrix(x, y, z);
    else
      return group_matrix(x, y, z).template cast<Complex>().eval();
  }();
  const Spectrum lambdas = claimed_spectrum(x, y, z);

  SpectrumReport report;
  Complex sum(0.0, 0.0), product(1.0, 0.0);
  for (int k = 0; k < 6; ++k) {
    const ComplexMat6 shifted = g - lambdas[k] * ComplexMat6::Identity();
    report.det_residuals[k] = std::abs(det(shifted));
    sum += lambdas[k];
    product *= lambdas[k];
  }
  report.sum_residual = std::abs(sum - g.trace());
  report.product_residual = std::abs(product - det(g));
  return report;
}

/// 3x3 complexified generator i * [[x, z, y], [z, y, x], [y, x, z]]; its
/// block embedding reproduces the 6x6 generator exactly.
template <typename Scalar>
ComplexMat3 u3_generator(const Scalar& x, const Scalar& y, const Scalar& z) {
  const Complex i(0.0, 1.0);
  const Complex cx = i * to_complex(x), cy = i * to_complex(y), cz = i * to_complex(z);
  ComplexMat3 g;
  g << cx, cz, cy,
       cz, cy, cx,
       cy, cx, cz;
  return g;
}

/// Closed form of exp(u3_generator): symmetric by construction, unitary for
/// real angles, determinant e^{i gamma}.
template <typename Scalar>
ComplexMat3 group_matrix_u3(const Scalar& x, const Scalar& y, const Scalar& z) {
  const SphericalArgs<Scalar> args = spherical_args(x, y, z);
  const Complex i(0.0, 1.0);
  const Complex r = to_complex(args.r);
  const Complex exp_ig = std::exp(i * to_complex(args.gamma));
  const Complex cos_r = std::cos(r);
  const Complex sinc_r23i = to_complex(sinc(args.r)) * Complex(0.0, 2.0 / 3.0);

  auto diag = [&](const Scalar& n) {
    return exp_ig / 3.0 + 2.0 * cos_r / 3.0 + to_complex(n) * sinc_r23i;
  };
  auto off = [&](const Scalar& n) {
    return exp_ig / 3.0 - cos_r / 3.0 + to_complex(n) * sinc_r23i;
  };

  ComplexMat3 g;
  const Complex oxy = off(args.nz), oxz = off(args.ny), oyz = off(args.nx);
  g << diag(args.nx), oxy, oxz,
       oxy, diag(args.ny), oyz,
       oxz, oyz, diag(args.nz);
  return g;
}

/// Real 6x6 image of a complex 3x3 matrix: each entry α+βi becomes the block
/// [[α, β], [−β, α]], complex coordinate k landing on real pair (2k-1, 2k).
inline RealMat6 embed_complex(const ComplexMat3& m) {
  RealMat6 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double re = m(i, j).real();
      const double im = m(i, j).imag();
      out(2 * i, 2 * j) = re;
      out(2 * i, 2 * j + 1) = im;
      out(2 * i + 1, 2 * j) = -im;
      out(2 * i + 1, 2 * j + 1) = re;
    }
  return out;
}

/// Group element of the scaled generator. No closed form is attempted; the
/// numeric exponential is the definition.
template <typename Scalar>
Mat6<Scalar> group_matrix_ce(const Scalar& x, const Scalar& y, const Scalar& z,
                             double c, double e) {
  return expm(generator_ce(x, y, z, c, e));
}

}  // namespace cusphere
