#pragma once

/// Lie-algebra generators of the six-dimensional rotation group, the
/// commutator machinery and the axiom checks that certify the span of
/// {b, d, f, c, e} as a Lie algebra.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cusphere/types.hpp"

namespace cusphere {

/// Canonical generator with angle x in the X slots, y in Y, z in Z:
///
///   [  0  x  0  z  0  y ]
///   [ -x  0 -z  0 -y  0 ]
///   [  0  z  0  y  0  x ]
///   [ -z  0 -y  0 -x  0 ]
///   [  0  y  0  x  0  z ]
///   [ -y  0 -x  0 -z  0 ]
///
/// Skew-symmetric for real angles; linear in (x, y, z). Note the global sign
/// relative to the zeroed adjoint layout: generator(1,0,0) equals the
/// transpose of basis_matrix(b), not b itself.
template <typename Scalar>
Mat6<Scalar> generator(const Scalar& x, const Scalar& y, const Scalar& z) {
  const Scalar o(0);
  Mat6<Scalar> g;
  g << o, x, o, z, o, y,
      -x, o, -z, o, -y, o,
       o, z, o, y, o, x,
      -z, o, -y, o, -x, o,
       o, y, o, x, o, z,
      -y, o, -x, o, -z, o;
  return g;
}

/// Generator with the oriented-plane slots additionally filled by the real
/// scaling factors c and e. Trace-free for all inputs, so its exponential
/// always has determinant 1; skew-symmetric iff e == -c (real angles).
template <typename Scalar>
Mat6<Scalar> generator_ce(const Scalar& x, const Scalar& y, const Scalar& z,
                          double c, double e) {
  const Scalar o(0), cs(c), es(e);
  Mat6<Scalar> g;
  g << o, x, cs, z, es, y,
      -x, o, -z, cs, -y, es,
      es, z, o, y, cs, x,
      -z, es, -y, o, -x, cs,
      cs, y, es, x, o, z,
      -y, cs, -x, es, -z, o;
  return g;
}

/// [m, n] = mn - nm.
template <typename DerivedA, typename DerivedB>
auto commutator(const Eigen::MatrixBase<DerivedA>& m,
                const Eigen::MatrixBase<DerivedB>& n) {
  if (m.rows() != m.cols() || n.rows() != n.cols() || m.rows() != n.rows())
    throw std::invalid_argument("commutator: dimension mismatch");
  return (m * n - n * m).eval();
}

struct CommutatorCheck {
  std::string identity;  // e.g. "[b, d] = c - e"
  bool holds = false;
};

/// Evaluates all twenty basis commutator identities at integer precision.
std::vector<CommutatorCheck> verify_commutator_table();

/// Max absolute residuals of the Lie-algebra axioms, sampled over random real
/// combinations of the five basis matrices.
struct LieAxiomReport {
  double bilinearity = 0.0;
  double anticommutativity = 0.0;
  double jacobi_basis = 0.0;   // on the integer basis triple; must be exactly 0
  double jacobi_random = 0.0;
  double skewness = 0.0;       // ‖gᵀ + g‖∞ for random real generator angles

  double max_residual() const;
};

LieAxiomReport lie_axiom_check(int samples, std::uint64_t seed);

}  // namespace cusphere
