#pragma once

/// Rotation action on six-component states and everything built on top of it:
/// quarter-turn progressions, the discrete oriented-plane orbits, iterated
/// trajectories and the closed-loop quadrature checks.
///
/// Convention: a state is a ROW vector (X_r, X_i, Y_r, Y_i, Z_r, Z_i) and
/// rotation acts by right multiplication, v' = v * G. This is the convention
/// under which a positive real angle rotates X_r into X_i; the transposed
/// (column) action flips the progression signs and is exposed behind a flag
/// for comparison only.

#include <array>
#include <vector>

#include "cusphere/types.hpp"

namespace cusphere {

/// v' = v * G.
template <typename Scalar, typename Derived>
SixVector<Scalar> rotate(const SixVector<Scalar>& v,
                         const Eigen::MatrixBase<Derived>& g) {
  return v * g;
}

enum class Axis { X, Y, Z };

const char* axis_name(Axis axis);
/// "X_r", "X_i", ..., "Z_i" for slots 0..5.
const char* slot_name(int slot);

/// A signed coordinate slot: where a basis direction landed.
struct SlotStep {
  int slot = 0;    // 0..5
  int sign = +1;
  friend bool operator==(const SlotStep&, const SlotStep&) = default;
};

/// Four successive quarter turns (angle π/2 about one axis) applied to each
/// of the real starting slots X_r, Y_r, Z_r. Every step lands exactly on a
/// signed basis slot; each 4-step row returns to its start.
struct QuarterTurnTable {
  Axis axis = Axis::X;
  // rows[0] starts at X_r, rows[1] at Y_r, rows[2] at Z_r
  std::array<std::array<SlotStep, 4>, 3> rows{};
};

QuarterTurnTable quarter_turn_progression(Axis axis);

/// The two oriented planes that act as discrete order-6 rotations.
enum class OrientedPlane { minus_c, minus_e };

/// Signed destination slot for each of the six coordinate slots.
using AxisMap = std::array<SlotStep, 6>;

/// The six successive powers of -c (or -e) acting on row vectors. Step 3 is
/// global negation, step 6 the identity; -c cycles the coordinate pairs as
/// X,Y,Z and -e in the opposite order. Exact integer arithmetic throughout.
std::array<AxisMap, 6> plane_orbit(OrientedPlane plane);

/// Iterated rotation record. States are stored with explicit imaginary parts;
/// runs with real angles, scales and start vector are computed in real
/// arithmetic, so their imaginary components are exact zeros.
struct Trajectory {
  Angles angles;
  ScaleParams scales;
  bool real_arithmetic = false;
  std::vector<SixVector<Complex>> states;  // states[0] is the start vector
};

/// Applies the fixed group element of (angles, scales) `steps` times to v0.
/// Real-angle zero-scale runs use the closed form; everything else goes
/// through the numeric exponential. Throws std::invalid_argument for
/// steps < 0.
Trajectory trajectory(const Angles& angles, const ScaleParams& scales, int steps,
                      const SixVector<Complex>& v0, bool transpose_action = false);

/// Composite trapezoid evaluation of the closed-loop integral of e^{ix} over
/// [0, 2π] (dim 1, n+1 nodes) or of e^{i(x+y+z)} over [0, 2π]^3 (dim 3,
/// (n+1)^3 nodes). Both vanish analytically. Throws std::invalid_argument for
/// n < 8 or dim not in {1, 3}.
Complex quadrature_check(int dim, int n);

/// Same quadrature applied to the constant 1 (control value: 2π or (2π)^3).
Complex quadrature_control(int dim, int n);

}  // namespace cusphere
