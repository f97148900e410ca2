#include "cusphere/dynamics.hpp"

#include <doctest.h>

#include <numbers>

#include "cusphere/closed_form.hpp"
#include "cusphere/group.hpp"
#include "cusphere/rng.hpp"

using namespace cusphere;

namespace {

constexpr double kPi = std::numbers::pi;

SixVector<Complex> unit_xr() {
  SixVector<Complex> v = SixVector<Complex>::Zero();
  v[0] = Complex(1.0, 0.0);
  return v;
}

}  // namespace

TEST_CASE("rotation against the identity is a no-op") {
  SampleRng rng(51);
  SixVector<double> v;
  for (int j = 0; j < 6; ++j) v[j] = rng.uniform(-2.0, 2.0);
  CHECK(((rotate(v, RealMat6::Identity().eval()) - v).cwiseAbs().maxCoeff()) == 0.0);
}

TEST_CASE("quarter turn moves the real slots onto their expected targets") {
  const RealMat6 g = group_matrix(kPi / 2.0, 0.0, 0.0);

  SixVector<double> xr = SixVector<double>::Zero();
  xr[0] = 1.0;
  const SixVector<double> xr1 = rotate(xr, g);
  CHECK(std::abs(xr1[1] - 1.0) <= 1e-12);  // X_r -> X_i
  CHECK(xr1.cwiseAbs().sum() - std::abs(xr1[1]) <= 1e-12);

  SixVector<double> yr = SixVector<double>::Zero();
  yr[2] = 1.0;
  const SixVector<double> yr1 = rotate(yr, g);
  CHECK(std::abs(yr1[5] - 1.0) <= 1e-12);  // Y_r -> Z_i
  CHECK(yr1.cwiseAbs().sum() - std::abs(yr1[5]) <= 1e-12);
}

TEST_CASE("quarter-turn progressions reproduce the expected 4-cycles") {
  struct Expected {
    Axis axis;
    SlotStep rows[3][4];
  };
  static const Expected expected[3] = {
      {Axis::X,
       {{{1, 1}, {0, -1}, {1, -1}, {0, 1}},     // X_r -> X_i -> -X_r -> -X_i -> X_r
        {{5, 1}, {2, -1}, {5, -1}, {2, 1}},     // Y_r -> Z_i -> -Y_r -> -Z_i -> Y_r
        {{3, 1}, {4, -1}, {3, -1}, {4, 1}}}},   // Z_r -> Y_i -> -Z_r -> -Y_i -> Z_r
      {Axis::Y,
       {{{5, 1}, {0, -1}, {5, -1}, {0, 1}},
        {{3, 1}, {2, -1}, {3, -1}, {2, 1}},
        {{1, 1}, {4, -1}, {1, -1}, {4, 1}}}},
      {Axis::Z,
       {{{3, 1}, {0, -1}, {3, -1}, {0, 1}},
        {{1, 1}, {2, -1}, {1, -1}, {2, 1}},
        {{5, 1}, {4, -1}, {5, -1}, {4, 1}}}},
  };
  for (const Expected& e : expected) {
    const QuarterTurnTable table = quarter_turn_progression(e.axis);
    for (int row = 0; row < 3; ++row)
      for (int step = 0; step < 4; ++step) {
        INFO(axis_name(e.axis), " row ", row, " step ", step);
        CHECK(table.rows[row][step] == e.rows[row][step]);
      }
  }
}

TEST_CASE("oriented-plane orbits match the tabulated progressions") {
  // Axis-level cells: destination pair index per step, with the alternating
  // sign pattern -,+,-,+,-,+.
  static const int dest_c[3][6] = {{1, 2, 0, 1, 2, 0},   // X: y z x y z x
                                   {2, 0, 1, 2, 0, 1},   // Y: z x y z x y
                                   {0, 1, 2, 0, 1, 2}};  // Z: x y z x y z
  static const int dest_e[3][6] = {{2, 1, 0, 2, 1, 0},   // X: z y x z y x
                                   {0, 2, 1, 0, 2, 1},   // Y: x z y x z y
                                   {1, 0, 2, 1, 0, 2}};  // Z: y x z y x z
  static const int sign[6] = {-1, +1, -1, +1, -1, +1};

  for (OrientedPlane plane : {OrientedPlane::minus_c, OrientedPlane::minus_e}) {
    const auto orbit = plane_orbit(plane);
    const auto& dest = plane == OrientedPlane::minus_c ? dest_c : dest_e;
    for (int pair = 0; pair < 3; ++pair)
      for (int step = 0; step < 6; ++step) {
        // Both slots of the pair land on the destination pair, same sign,
        // real slot onto real and imaginary onto imaginary.
        const SlotStep lo = orbit[step][2 * pair];
        const SlotStep hi = orbit[step][2 * pair + 1];
        CHECK(lo.slot == 2 * dest[pair][step]);
        CHECK(hi.slot == 2 * dest[pair][step] + 1);
        CHECK(lo.sign == sign[step]);
        CHECK(hi.sign == sign[step]);
      }
    for (int i = 0; i < 6; ++i) {
      CHECK(orbit[2][i] == SlotStep{i, -1});  // third power negates everything
      CHECK(orbit[5][i] == SlotStep{i, +1});  // sixth power is the identity
    }
  }
}

TEST_CASE("orbit maps compose back to the identity") {
  for (OrientedPlane plane : {OrientedPlane::minus_c, OrientedPlane::minus_e}) {
    const auto orbit = plane_orbit(plane);
    const AxisMap& one = orbit[0];
    AxisMap acc;
    for (int i = 0; i < 6; ++i) acc[i] = {i, +1};
    for (int k = 0; k < 6; ++k)
      for (int i = 0; i < 6; ++i) {
        const SlotStep next = one[acc[i].slot];
        acc[i] = {next.slot, acc[i].sign * next.sign};
      }
    for (int i = 0; i < 6; ++i) CHECK(acc[i] == SlotStep{i, +1});
  }
}

TEST_CASE("trajectory basics") {
  const SixVector<Complex> v0 = unit_xr();
  const Trajectory still = trajectory(Angles::real(0.3, 0.0, 0.0), ScaleParams{}, 0, v0);
  CHECK(still.states.size() == 1);
  CHECK(still.states[0] == v0);
  CHECK(still.real_arithmetic);

  CHECK_THROWS_AS(trajectory(Angles::real(0.1, 0.0, 0.0), ScaleParams{}, -1, v0),
                  std::invalid_argument);
}

TEST_CASE("real runs carry exact-zero imaginary parts") {
  const Trajectory run = trajectory(Angles::real(kPi / 200, kPi / 300, kPi / 500),
                                    ScaleParams{}, 50, unit_xr());
  CHECK(run.real_arithmetic);
  for (const auto& state : run.states)
    for (int j = 0; j < 6; ++j) CHECK(state[j].imag() == 0.0);
}

TEST_CASE("single-angle trajectory reduces to the plane circle") {
  const double theta = kPi / 1000.0;
  const Trajectory run =
      trajectory(Angles::real(theta, 0.0, 0.0), ScaleParams{}, 5000, unit_xr());
  REQUIRE(run.states.size() == 5001);
  double worst = 0.0, tail = 0.0, drift = 0.0;
  for (std::size_t k = 0; k < run.states.size(); ++k) {
    const auto& v = run.states[k];
    worst = std::max(worst, std::abs(v[0].real() - std::cos(k * theta)));
    worst = std::max(worst, std::abs(v[1].real() - std::sin(k * theta)));
    for (int j = 2; j < 6; ++j) tail = std::max(tail, std::abs(v[j]));
    double norm = 0.0;
    for (int j = 0; j < 6; ++j) norm += std::norm(v[j]);
    drift = std::max(drift, std::abs(std::sqrt(norm) - 1.0));
  }
  CHECK(worst <= 1e-6);
  CHECK(tail <= 1e-12);
  CHECK(drift <= 1e-8);
}

TEST_CASE("real-angle rotation preserves the norm stepwise") {
  SampleRng rng(52);
  for (int i = 0; i < 20; ++i) {
    const RealMat6 g = group_matrix(rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi),
                                    rng.uniform(-kPi, kPi));
    SixVector<double> v;
    for (int j = 0; j < 6; ++j) v[j] = rng.uniform(-1.0, 1.0);
    const double norm0 = v.norm();
    for (int step = 0; step < 50; ++step) {
      v = rotate(v, g);
      CHECK(std::abs(v.norm() - norm0) <= 1e-12);
    }
  }
}

TEST_CASE("row action is consistent with composition") {
  SampleRng rng(53);
  for (int i = 0; i < 50; ++i) {
    const RealMat6 g1 = group_matrix(rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi),
                                     rng.uniform(-kPi, kPi));
    const RealMat6 g2 = group_matrix(rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi),
                                     rng.uniform(-kPi, kPi));
    SixVector<double> v;
    for (int j = 0; j < 6; ++j) v[j] = rng.uniform(-1.0, 1.0);
    const SixVector<double> once = rotate(v, (g1 * g2).eval());
    const SixVector<double> twice = rotate(rotate(v, g1), g2);
    CHECK((once - twice).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("transposed action flips the quarter-turn direction") {
  const Trajectory forward =
      trajectory(Angles::real(kPi / 2.0, 0.0, 0.0), ScaleParams{}, 1, unit_xr(), false);
  const Trajectory flipped =
      trajectory(Angles::real(kPi / 2.0, 0.0, 0.0), ScaleParams{}, 1, unit_xr(), true);
  CHECK(std::abs(forward.states[1][1].real() - 1.0) <= 1e-12);   // X_r -> +X_i
  CHECK(std::abs(flipped.states[1][1].real() + 1.0) <= 1e-12);   // X_r -> -X_i
}

TEST_CASE("complex angles grow the envelope") {
  const Angles angles{Complex(kPi / 200, kPi / 10000), Complex(kPi / 300, kPi / 20000),
                      Complex(kPi / 500, kPi / 30000)};
  const Trajectory run = trajectory(angles, ScaleParams{}, 20000, unit_xr());
  CHECK(!run.real_arithmetic);
  CHECK(run.states.back().norm() > run.states.front().norm());
}

TEST_CASE("scaled runs change the norm, opposite scales do not") {
  const Angles angles = Angles::real(kPi / 200, kPi / 300, kPi / 500);

  const Trajectory growing =
      trajectory(angles, ScaleParams{-kPi / 30000, kPi / 10000}, 2000, unit_xr());
  CHECK(growing.states.back().norm() > growing.states.front().norm());

  // Opposite scales keep the generator skew, so every step is an isometry.
  const Trajectory balanced =
      trajectory(angles, ScaleParams{0.01, -0.01}, 500, unit_xr());
  for (const auto& state : balanced.states)
    CHECK(std::abs(state.norm() - 1.0) <= 1e-10);

  const Eigen::VectorXd sv = singular_values(
      group_matrix_ce(kPi / 200, kPi / 300, kPi / 500, 0.01, 0.01));
  CHECK(sv.maxCoeff() > 1.0);
}

TEST_CASE("closed-loop quadrature") {
  CHECK(std::abs(quadrature_check(1, 256)) <= 1e-12);
  CHECK(std::abs(quadrature_check(3, 32)) <= 1e-8);
  CHECK(std::abs(quadrature_control(1, 256) - Complex(2 * kPi, 0.0)) <= 1e-12);

  CHECK_THROWS_AS(quadrature_check(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(quadrature_check(2, 64), std::invalid_argument);
}
