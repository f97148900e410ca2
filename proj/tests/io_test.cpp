#include "cusphere/io.hpp"

#include <doctest.h>

#include <numbers>
#include <sstream>

#include "cusphere/closed_form.hpp"
#include "cusphere/rng.hpp"

using namespace cusphere;

TEST_CASE("angle expressions") {
  constexpr double pi = std::numbers::pi;
  CHECK(parse_angle_expr("0.25") == 0.25);
  CHECK(parse_angle_expr("-1e-3") == -1e-3);
  CHECK(parse_angle_expr("pi") == pi);
  CHECK(parse_angle_expr("-pi") == -pi);
  CHECK(parse_angle_expr("pi/200") == pi / 200.0);
  CHECK(parse_angle_expr("-pi/30000") == -(pi / 30000.0));
  CHECK(parse_angle_expr("2pi/3") == 2.0 * pi / 3.0);
  CHECK(parse_angle_expr("1.5pi") == 1.5 * pi / 1.0);
  CHECK(parse_angle_expr(" pi / 4 ") == pi / 4.0);

  CHECK_THROWS_AS(parse_angle_expr(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle_expr("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle_expr("pi/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle_expr("pi/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle_expr("pix"), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle_expr("1.2.3"), std::invalid_argument);
}

TEST_CASE("full-precision formatting round-trips doubles exactly") {
  SampleRng rng(61);
  for (int i = 0; i < 1000; ++i) {
    const double v = rng.uniform(-1.0, 1.0) * std::pow(10.0, rng.uniform(-12.0, 12.0));
    CHECK(std::stod(format_full(v)) == v);
  }
  CHECK(std::stod(format_full(0.0)) == 0.0);
}

TEST_CASE("trajectory CSV round-trips bit-for-bit") {
  const Angles angles = Angles::real(0.137, -0.02, 1.9);
  const Trajectory real_run =
      trajectory(angles, ScaleParams{}, 40, [] {
        SixVector<Complex> v = SixVector<Complex>::Zero();
        v[0] = Complex(1.0, 0.0);
        return v;
      }());

  const std::string csv = trajectory_csv(real_run);
  CHECK(csv.rfind("step,c1_re,c1_im", 0) == 0);

  std::istringstream in(csv);
  const auto states = parse_trajectory_csv(in);
  REQUIRE(states.size() == real_run.states.size());
  for (std::size_t k = 0; k < states.size(); ++k)
    for (int j = 0; j < 6; ++j) {
      CHECK(states[k][j].real() == real_run.states[k][j].real());
      CHECK(states[k][j].imag() == real_run.states[k][j].imag());
    }

  // Real runs serialize imaginary columns as plain zeros.
  std::istringstream lines(csv);
  std::string header, first_row;
  std::getline(lines, header);
  std::getline(lines, first_row);
  CHECK(first_row == "0,1,0,0,0,0,0,0,0,0,0,0,0");
}

TEST_CASE("complex trajectory CSV round-trips too") {
  const Angles angles{Complex(0.1, 0.01), Complex(-0.2, 0.0), Complex(0.3, -0.005)};
  SixVector<Complex> v0 = SixVector<Complex>::Zero();
  v0[0] = Complex(0.5, -0.25);
  const Trajectory run = trajectory(angles, ScaleParams{}, 25, v0);
  CHECK(!run.real_arithmetic);

  std::istringstream in(trajectory_csv(run));
  const auto states = parse_trajectory_csv(in);
  REQUIRE(states.size() == run.states.size());
  for (std::size_t k = 0; k < states.size(); ++k)
    CHECK(states[k] == run.states[k]);
}

TEST_CASE("matrix JSON carries [re, im] pairs row-major") {
  const RealMat6 g = group_matrix(0.3, -0.7, 1.1);
  const nlohmann::json j = matrix_json(g, angles_meta(Angles::real(0.3, -0.7, 1.1), {}));
  CHECK(j["complex"] == false);
  REQUIRE(j["rows"].size() == 6);
  REQUIRE(j["rows"][0].size() == 6);
  CHECK(j["rows"][2][4].size() == 2);
  CHECK(j["rows"][2][4][0].get<double>() == g(2, 4));
  CHECK(j["rows"][2][4][1].get<double>() == 0.0);
  CHECK(j["meta"]["angles"]["y"][0].get<double>() == -0.7);
  CHECK(j["meta"]["scales"]["c"].get<double>() == 0.0);

  const nlohmann::json ju = matrix_json(group_matrix_u3(0.3, -0.7, 1.1));
  CHECK(ju["complex"] == true);
  CHECK(ju["rows"].size() == 3);
  CHECK(!ju.contains("meta"));
}

TEST_CASE("cayley serialization") {
  const CayleyTable table = cayley_table();
  const std::string text = cayley_text(table);
  CHECK(text.find("   a   b   c   d   e   f") != std::string::npos);
  CHECK(text.find("-a") != std::string::npos);

  const nlohmann::json j = cayley_json(table);
  REQUIRE(j["rows"].size() == 6);
  CHECK(j["rows"][0][0] == "a");
  CHECK(j["rows"][1][1] == "-a");
  CHECK(j["rows"][1][5] == "-c");

  // Every token parses back to the table cell.
  for (int r = 0; r < 6; ++r)
    for (int s = 0; s < 6; ++s) {
      const auto parsed = element_from_token(j["rows"][r][s].get<std::string>());
      REQUIRE(parsed.has_value());
      CHECK(*parsed == table[r][s]);
    }
}

TEST_CASE("audit text flags the cube relations") {
  const std::string text = audit_text(relation_audit());
  CHECK(text.find("b^2 = -1: confirmed") != std::string::npos);
  CHECK(text.find("ce = 1: confirmed") != std::string::npos);
  CHECK(text.find("c^3 = -1: CONTRADICTED (actual +a)") != std::string::npos);
  CHECK(text.find("e^3 = -1: CONTRADICTED (actual +a)") != std::string::npos);
}

TEST_CASE("orbit and progression text") {
  const std::string orbit_c = orbit_text(OrientedPlane::minus_c,
                                         plane_orbit(OrientedPlane::minus_c));
  CHECK(orbit_c.find("-X_y") != std::string::npos);
  CHECK(orbit_c.find(" X_x") != std::string::npos);
  const std::string orbit_e = orbit_text(OrientedPlane::minus_e,
                                         plane_orbit(OrientedPlane::minus_e));
  CHECK(orbit_e.find("-X_z") != std::string::npos);

  const std::string prog = quarter_turn_text(quarter_turn_progression(Axis::Y));
  CHECK(prog.find("X_r -> Z_i -> -X_r -> -Z_i -> X_r") != std::string::npos);
}
