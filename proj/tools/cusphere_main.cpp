// cusphere CLI: Cayley-table and relation audits for the six-dimensional
// rotation group, closed-form evaluation, property-verification suites,
// trajectory export and the closed-loop quadrature checks.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cusphere/closed_form.hpp"
#include "cusphere/dynamics.hpp"
#include "cusphere/group.hpp"
#include "cusphere/io.hpp"
#include "cusphere/verify.hpp"

namespace {

using namespace cusphere;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInvocation = 2;

struct AngleFlags {
  std::string x = "0", y = "0", z = "0";
  std::string xi = "0", yi = "0", zi = "0";

  Angles parse() const {
    return Angles{Complex(parse_angle_expr(x), parse_angle_expr(xi)),
                  Complex(parse_angle_expr(y), parse_angle_expr(yi)),
                  Complex(parse_angle_expr(z), parse_angle_expr(zi))};
  }
};

void add_angle_flags(CLI::App* cmd, AngleFlags& flags) {
  cmd->add_option("--x", flags.x, "X angle (radians or pi fraction, e.g. pi/200)");
  cmd->add_option("--y", flags.y, "Y angle");
  cmd->add_option("--z", flags.z, "Z angle");
  cmd->add_option("--xi", flags.xi, "imaginary part of the X angle");
  cmd->add_option("--yi", flags.yi, "imaginary part of the Y angle");
  cmd->add_option("--zi", flags.zi, "imaginary part of the Z angle");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
  out << text;
}

ScaleParams parse_scales(const std::vector<std::string>& ce) {
  if (ce.empty()) return {};
  return ScaleParams{parse_angle_expr(ce[0]), parse_angle_expr(ce[1])};
}

int run_cayley(bool audit, const std::string& format, const std::string& out_path) {
  const CayleyTable table = cayley_table();
  std::string text;
  if (format == "json") {
    nlohmann::json j = cayley_json(table);
    if (audit) {
      nlohmann::json checks = nlohmann::json::array();
      for (const RelationCheck& check : relation_audit())
        checks.push_back({{"relation", check.relation},
                          {"confirmed", check.confirmed},
                          {"actual", check.actual}});
      j["audit"] = checks;
    }
    text = j.dump(2) + "\n";
  } else {
    text = cayley_text(table);
    if (audit) text += "\n" + audit_text(relation_audit());
  }
  emit(text, out_path);
  return table == cayley_reference() ? kExitOk : kExitCheckFailed;
}

int run_eval(const AngleFlags& angle_flags, bool u3,
             const std::vector<std::string>& ce, const std::string& format,
             const std::string& out_path) {
  const Angles angles = angle_flags.parse();
  const ScaleParams scales = parse_scales(ce);
  const nlohmann::json meta = angles_meta(angles, scales);

  std::string text;
  if (u3) {
    if (!ce.empty()) throw std::invalid_argument("--u3 and --ce are exclusive");
    const ComplexMat3 m = angles.is_real()
                              ? group_matrix_u3(angles.x.real(), angles.y.real(),
                                                angles.z.real())
                              : group_matrix_u3(angles.x, angles.y, angles.z);
    text = format == "json"  ? matrix_json(m, meta).dump(2) + "\n"
           : format == "csv" ? matrix_csv(m)
                             : matrix_text(m);
  } else if (angles.is_real()) {
    const double x = angles.x.real(), y = angles.y.real(), z = angles.z.real();
    const RealMat6 m = scales.is_zero() ? group_matrix(x, y, z)
                                        : group_matrix_ce(x, y, z, scales.c, scales.e);
    text = format == "json"  ? matrix_json(m, meta).dump(2) + "\n"
           : format == "csv" ? matrix_csv(m)
                             : matrix_text(m);
  } else {
    const ComplexMat6 m =
        scales.is_zero()
            ? group_matrix(angles.x, angles.y, angles.z)
            : group_matrix_ce(angles.x, angles.y, angles.z, scales.c, scales.e);
    text = format == "json"  ? matrix_json(m, meta).dump(2) + "\n"
           : format == "csv" ? matrix_csv(m)
                             : matrix_text(m);
  }
  emit(text, out_path);
  return kExitOk;
}

int run_verify_cmd(const VerifyOptions& options, const std::string& out_path) {
  const VerifyReport report = run_verify(options);
  emit(report.text(), out_path);
  return report.all_pass() ? kExitOk : kExitCheckFailed;
}

int run_rotate(const AngleFlags& angle_flags, const std::vector<std::string>& ce,
               int steps, const std::string& v0_csv, bool transpose_action,
               const std::string& out_path) {
  if (steps < 0) throw std::invalid_argument("--steps must be >= 0");
  SixVector<Complex> v0 = SixVector<Complex>::Zero();
  {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream stream(v0_csv);
    while (std::getline(stream, field, ',')) fields.push_back(field);
    if (fields.size() != 6)
      throw std::invalid_argument("--v0 needs 6 comma-separated components");
    for (int i = 0; i < 6; ++i) v0[i] = Complex(parse_angle_expr(fields[i]), 0.0);
  }
  const Trajectory run =
      trajectory(angle_flags.parse(), parse_scales(ce), steps, v0, transpose_action);
  emit(trajectory_csv(run), out_path);
  return kExitOk;
}

int run_orbit(const std::string& plane_name, const std::string& format,
              const std::string& out_path) {
  const OrientedPlane plane =
      plane_name == "c" ? OrientedPlane::minus_c : OrientedPlane::minus_e;
  const auto orbit = plane_orbit(plane);
  emit(format == "json" ? orbit_json(plane, orbit).dump(2) + "\n"
                        : orbit_text(plane, orbit),
       out_path);

  bool landmarks_ok = true;
  for (int i = 0; i < 6; ++i) {
    landmarks_ok &= orbit[2][i] == SlotStep{i, -1};
    landmarks_ok &= orbit[5][i] == SlotStep{i, +1};
  }
  return landmarks_ok ? kExitOk : kExitCheckFailed;
}

int run_integrate(int dim, int n, double tol, const std::string& out_path) {
  const Complex value = quadrature_check(dim, n);
  char line[128];
  std::snprintf(line, sizeof(line), "value = %.17g %+.17gi\n|value| = %.17g\n",
                value.real(), value.imag(), std::abs(value));
  emit(line, out_path);
  return std::abs(value) <= tol ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"six-dimensional rotation group toolkit"};
  app.require_subcommand(1);

  // cayley
  auto* cayley_cmd = app.add_subcommand("cayley", "print the Cayley table");
  bool audit = false;
  std::string cayley_format = "text", cayley_out;
  cayley_cmd->add_flag("--audit", audit, "append the relation audit");
  cayley_cmd->add_option("--format", cayley_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  cayley_cmd->add_option("--out", cayley_out, "write to file instead of stdout");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a group element");
  AngleFlags eval_angles;
  add_angle_flags(eval_cmd, eval_angles);
  bool eval_u3 = false;
  std::vector<std::string> eval_ce;
  std::string eval_format = "text", eval_out;
  eval_cmd->add_flag("--u3", eval_u3, "evaluate the 3x3 unitary form");
  eval_cmd->add_option("--ce", eval_ce, "scaling factors C E")->expected(2);
  eval_cmd->add_option("--format", eval_format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  eval_cmd->add_option("--out", eval_out, "write to file instead of stdout");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run property-verification suites");
  VerifyOptions verify_options;
  std::string verify_out;
  verify_cmd->add_option("--suite", verify_options.suite,
                         "group|algebra|closedform|u3|dynamics|all")
      ->check(CLI::IsMember({"group", "algebra", "closedform", "u3", "dynamics", "all"}));
  verify_cmd->add_option("--samples", verify_options.samples, "random samples per check");
  verify_cmd->add_option("--seed", verify_options.seed, "RNG seed");
  verify_cmd->add_option("--tol", verify_options.tol, "residual tolerance");
  verify_cmd->add_option("--out", verify_out, "write to file instead of stdout");

  // rotate
  auto* rotate_cmd = app.add_subcommand("rotate", "export an iterated trajectory as CSV");
  AngleFlags rotate_angles;
  add_angle_flags(rotate_cmd, rotate_angles);
  std::vector<std::string> rotate_ce;
  int rotate_steps = 1000;
  std::string rotate_v0 = "1,0,0,0,0,0", rotate_out;
  bool rotate_transpose = false;
  rotate_cmd->add_option("--ce", rotate_ce, "scaling factors C E")->expected(2);
  rotate_cmd->add_option("--steps", rotate_steps, "iteration count");
  rotate_cmd->add_option("--v0", rotate_v0, "start vector, 6 comma-separated values");
  rotate_cmd->add_flag("--transpose-action", rotate_transpose,
                       "use the column (transposed) action for comparison");
  rotate_cmd->add_option("--out", rotate_out, "write to file instead of stdout");

  // orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "print an oriented-plane orbit");
  std::string orbit_plane = "c", orbit_format = "text", orbit_out;
  orbit_cmd->add_option("--plane", orbit_plane, "c|e")
      ->check(CLI::IsMember({"c", "e"}));
  orbit_cmd->add_option("--format", orbit_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  orbit_cmd->add_option("--out", orbit_out, "write to file instead of stdout");

  // integrate
  auto* integrate_cmd = app.add_subcommand("integrate", "closed-loop quadrature check");
  int integrate_dim = 1, integrate_n = 256;
  double integrate_tol = 1e-9;
  std::string integrate_out;
  integrate_cmd->add_option("--dim", integrate_dim, "1 or 3");
  integrate_cmd->add_option("--n", integrate_n, "nodes per axis (>= 8)");
  integrate_cmd->add_option("--tol", integrate_tol, "pass threshold on |value|");
  integrate_cmd->add_option("--out", integrate_out, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInvocation;
  }

  if (const char* env_seed = std::getenv("CUSPHERE_SEED")) {
    try {
      verify_options.seed = std::stoull(env_seed);
    } catch (const std::exception&) {
      std::cerr << "bad CUSPHERE_SEED value '" << env_seed << "'\n";
      return kExitBadInvocation;
    }
  }

  try {
    if (cayley_cmd->parsed()) return run_cayley(audit, cayley_format, cayley_out);
    if (eval_cmd->parsed())
      return run_eval(eval_angles, eval_u3, eval_ce, eval_format, eval_out);
    if (verify_cmd->parsed()) return run_verify_cmd(verify_options, verify_out);
    if (rotate_cmd->parsed())
      return run_rotate(rotate_angles, rotate_ce, rotate_steps, rotate_v0,
                        rotate_transpose, rotate_out);
    if (orbit_cmd->parsed()) return run_orbit(orbit_plane, orbit_format, orbit_out);
    if (integrate_cmd->parsed())
      return run_integrate(integrate_dim, integrate_n, integrate_tol, integrate_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInvocation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitBadInvocation;
}
