#include "cusphere/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cusphere/closed_form.hpp"
#include "cusphere/group.hpp"

namespace cusphere {

namespace {

constexpr double kPi = std::numbers::pi;

// Snaps a numerically clean signed-basis row vector onto (slot, sign).
SlotStep snap_to_slot(const SixVector<double>& v) {
  constexpr double tol = 1e-12;
  int slot = -1;
  for (int j = 0; j < 6; ++j) {
    if (std::abs(v[j]) > tol) {
      if (slot != -1) throw std::logic_error("state is not a signed basis slot");
      slot = j;
    }
  }
  if (slot == -1 || std::abs(std::abs(v[slot]) - 1.0) > tol)
    throw std::logic_error("state is not a signed basis slot");
  return {slot, v[slot] > 0 ? +1 : -1};
}

}  // namespace

const char* axis_name(Axis axis) {
  switch (axis) {
    case Axis::X: return "X";
    case Axis::Y: return "Y";
    default: return "Z";
  }
}

const char* slot_name(int slot) {
  static const char* names[6] = {"X_r", "X_i", "Y_r", "Y_i", "Z_r", "Z_i"};
  return names[slot];
}

QuarterTurnTable quarter_turn_progression(Axis axis) {
  double x = 0.0, y = 0.0, z = 0.0;
  (axis == Axis::X ? x : axis == Axis::Y ? y : z) = kPi / 2.0;
  const RealMat6 g = group_matrix(x, y, z);

  QuarterTurnTable table;
  table.axis = axis;
  for (int start = 0; start < 3; ++start) {
    SixVector<double> v = SixVector<double>::Zero();
    v[2 * start] = 1.0;  // X_r, Y_r, Z_r
    for (int step = 0; step < 4; ++step) {
      v = rotate(v, g);
      table.rows[start][step] = snap_to_slot(v);
    }
  }
  return table;
}

std::array<AxisMap, 6> plane_orbit(OrientedPlane plane) {
  const IntMat6 rotor =
      -basis_matrix(plane == OrientedPlane::minus_c ? ElementLabel::c
                                                    : ElementLabel::e);
  std::array<AxisMap, 6> orbit;
  IntMat6 power = IntMat6::Identity();
  for (int step = 0; step < 6; ++step) {
    power = (power * rotor).eval();
    for (int i = 0; i < 6; ++i) {
      // Row action: e_i * power is row i, a single ±1 entry.
      for (int j = 0; j < 6; ++j)
        if (power(i, j) != 0) orbit[step][i] = {j, power(i, j)};
    }
  }
  return orbit;
}

Trajectory trajectory(const Angles& angles, const ScaleParams& scales, int steps,
                      const SixVector<Complex>& v0, bool transpose_action) {
  if (steps < 0) throw std::invalid_argument("trajectory: steps must be >= 0");

  Trajectory result;
  result.angles = angles;
  result.scales = scales;
  result.real_arithmetic = angles.is_real() && v0.imag().isZero(0.0);
  result.states.reserve(static_cast<std::size_t>(steps) + 1);

  if (result.real_arithmetic) {
    RealMat6 g = scales.is_zero()
                     ? group_matrix(angles.x.real(), angles.y.real(), angles.z.real())
                     : group_matrix_ce(angles.x.real(), angles.y.real(),
                                       angles.z.real(), scales.c, scales.e);
    if (transpose_action) g.transposeInPlace();
    SixVector<double> v = v0.real();
    result.states.push_back(v.cast<Complex>());
    for (int k = 0; k < steps; ++k) {
      v = rotate(v, g);
      result.states.push_back(v.cast<Complex>());
    }
  } else {
    ComplexMat6 g = scales.is_zero()
                        ? expm(generator(angles.x, angles.y, angles.z))
                        : expm(generator_ce(angles.x, angles.y, angles.z,
                                            scales.c, scales.e));
    if (transpose_action) g.transposeInPlace();
    SixVector<Complex> v = v0;
    result.states.push_back(v);
    for (int k = 0; k < steps; ++k) {
      v = rotate(v, g);
      result.states.push_back(v);
    }
  }
  return result;
}

namespace {

// Kahan-compensated complex accumulator for the long quadrature sums.
struct CompensatedSum {
  Complex sum{0.0, 0.0};
  Complex carry{0.0, 0.0};

  void add(const Complex& value) {
    const Complex y = value - carry;
    const Complex t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

Complex quadrature_check(int dim, int n) {
  if (n < 8) throw std::invalid_argument("quadrature_check: n must be >= 8");
  if (dim != 1 && dim != 3) throw std::invalid_argument("quadrature_check: dim must be 1 or 3");

  const double h = 2.0 * kPi / n;
  std::vector<Complex> node(n + 1);
  std::vector<double> weight(n + 1, h);
  weight.front() = h / 2.0;
  weight.back() = h / 2.0;
  for (int j = 0; j <= n; ++j) node[j] = std::exp(Complex(0.0, j * h));

  CompensatedSum acc;
  if (dim == 1) {
    for (int j = 0; j <= n; ++j) acc.add(weight[j] * node[j]);
  } else {
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        const Complex plane = weight[i] * weight[j] * node[i] * node[j];
        for (int k = 0; k <= n; ++k) acc.add(plane * weight[k] * node[k]);
      }
  }
  return acc.sum;
}

Complex quadrature_control(int dim, int n) {
  if (n < 8) throw std::invalid_argument("quadrature_control: n must be >= 8");
  if (dim != 1 && dim != 3) throw std::invalid_argument("quadrature_control: dim must be 1 or 3");
  const double h = 2.0 * kPi / n;
  double line = 0.0;
  for (int j = 0; j <= n; ++j) line += (j == 0 || j == n) ? h / 2.0 : h;
  return Complex(dim == 1 ? line : line * line * line, 0.0);
}

}  // namespace cusphere
