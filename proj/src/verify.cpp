#include "cusphere/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "cusphere/closed_form.hpp"
#include "cusphere/dynamics.hpp"
#include "cusphere/group.hpp"
#include "cusphere/rng.hpp"

namespace cusphere {

namespace {

constexpr double kPi = std::numbers::pi;

class SuiteRunner {
 public:
  explicit SuiteRunner(const VerifyOptions& options) : options_(options) {}

  std::vector<CheckResult> checks;

  void residual_check(const std::string& suite, const std::string& name,
                      double residual, double bound) {
    checks.push_back({suite, name, false, residual, bound, residual <= bound});
  }

  void residual_check(const std::string& suite, const std::string& name,
                      double residual) {
    residual_check(suite, name, residual, options_.tol);
  }

  void exact_check(const std::string& suite, const std::string& name,
                   int mismatches) {
    checks.push_back({suite, name, true, static_cast<double>(mismatches), 0.0,
                      mismatches == 0});
  }

  // Random real triple in [-pi, pi]^3; every tenth sample sits on the
  // degenerate axis x ≈ y ≈ z to exercise the sinc path.
  std::array<double, 3> sample_angles(SampleRng& rng, int index) const {
    if (index % 10 == 9) {
      const double t = rng.uniform(-kPi, kPi);
      return {t + rng.uniform(-1e-8, 1e-8), t + rng.uniform(-1e-8, 1e-8),
              t + rng.uniform(-1e-8, 1e-8)};
    }
    return {rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi)};
  }

  void run_group();
  void run_algebra();
  void run_closedform();
  void run_u3();
  void run_dynamics();

 private:
  VerifyOptions options_;
};

void SuiteRunner::run_group() {
  const CayleyTable computed = cayley_table();
  const CayleyTable& reference = cayley_reference();
  int mismatches = 0;
  for (int r = 0; r < 6; ++r)
    for (int s = 0; s < 6; ++s)
      if (!(computed[r][s] == reference[r][s])) ++mismatches;
  exact_check("group", "cayley.matches_reference", mismatches);

  int audit_unexpected = 0;
  for (const RelationCheck& check : relation_audit()) {
    const bool cube = check.relation == "c^3 = -1" || check.relation == "e^3 = -1";
    if (cube ? (check.confirmed || check.actual != "+a") : !check.confirmed)
      ++audit_unexpected;
  }
  exact_check("group", "relations.audit_profile", audit_unexpected);

  const std::vector<SignedElement> elements = enumerate_group();
  exact_check("group", "closure.order_12",
              elements.size() == 12 ? 0 : static_cast<int>(elements.size()));
  const bool has_neg_identity =
      std::find(elements.begin(), elements.end(),
                SignedElement{ElementLabel::a, -1}) != elements.end();
  exact_check("group", "closure.contains_negative_identity", has_neg_identity ? 0 : 1);

  SampleRng rng(options_.seed);
  int word_mismatches = 0;
  const int word_samples = std::min(options_.samples, 200);
  for (int i = 0; i < word_samples; ++i) {
    const int length = rng.index(9);  // 0..8
    std::vector<ElementLabel> word(length);
    IntMat6 product = IntMat6::Identity();
    for (int k = 0; k < length; ++k) {
      word[k] = kAllLabels[rng.index(6)];
      product = (product * basis_matrix(word[k])).eval();
    }
    if (!(reduce_word(std::span<const ElementLabel>(word)) == identify(product)))
      ++word_mismatches;
  }
  exact_check("group", "words.match_matrix_products", word_mismatches);

  double det_residual = 0.0, expm_residual = 0.0;
  const int rot_samples = std::min(options_.samples, 200);
  for (int i = 0; i < rot_samples; ++i) {
    const double theta = rng.uniform(-10.0, 10.0);
    const double scale = rng.uniform(-0.5, 0.5);
    det_residual = std::max(det_residual, std::abs(det(rot2_reference(0.0, theta)) - 1.0));
    Mat2<double> gen2;
    gen2 << scale, -theta, theta, scale;
    expm_residual = std::max(
        expm_residual, inf_norm(rot2_reference(scale, theta) - expm(gen2)));
  }
  residual_check("group", "rot2.det_one", det_residual);
  residual_check("group", "rot2.matches_expm", expm_residual);
}

void SuiteRunner::run_algebra() {
  int failed = 0;
  for (const CommutatorCheck& check : verify_commutator_table())
    if (!check.holds) ++failed;
  exact_check("algebra", "commutators.basis_identities", failed);

  const LieAxiomReport axioms =
      lie_axiom_check(std::min(options_.samples, 500), options_.seed);
  residual_check("algebra", "lie.bilinearity", axioms.bilinearity);
  residual_check("algebra", "lie.anticommutativity", axioms.anticommutativity);
  residual_check("algebra", "lie.jacobi_basis", axioms.jacobi_basis, 0.0);
  residual_check("algebra", "lie.jacobi_random", axioms.jacobi_random);
  residual_check("algebra", "generator.skew_symmetry", axioms.skewness);

  SampleRng rng(options_.seed);
  double linearity = 0.0, trace_residual = 0.0, skew_residual = 0.0;
  for (int i = 0; i < std::min(options_.samples, 200); ++i) {
    const auto [x1, y1, z1] = std::array{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                                         rng.uniform(-2.0, 2.0)};
    const auto [x2, y2, z2] = std::array{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                                         rng.uniform(-2.0, 2.0)};
    const double alpha = rng.uniform(-2.0, 2.0);
    const RealMat6 lhs = generator(alpha * x1 + x2, alpha * y1 + y2, alpha * z1 + z2);
    const RealMat6 rhs = alpha * generator(x1, y1, z1) + generator(x2, y2, z2);
    linearity = std::max(linearity, inf_norm(lhs - rhs));

    const double c = rng.uniform(-0.5, 0.5), e = rng.uniform(-0.5, 0.5);
    const RealMat6 gce = generator_ce(x1, y1, z1, c, e);
    trace_residual = std::max(trace_residual, std::abs(gce.trace()));
    const RealMat6 skew = generator_ce(x1, y1, z1, c, -c);
    skew_residual = std::max(skew_residual, inf_norm(skew.transpose() + skew));
  }
  residual_check("algebra", "generator.linearity", linearity);
  residual_check("algebra", "generator_ce.trace_zero", trace_residual);
  residual_check("algebra", "generator_ce.skew_when_e_is_minus_c", skew_residual);
}

void SuiteRunner::run_closedform() {
  SampleRng rng(options_.seed);
  double vs_expm = 0.0, orth = 0.0, det_one = 0.0, row_sums = 0.0;
  double branch = 0.0, p_sum = 0.0, p_norm = 0.0;
  double spectrum_det = 0.0, spectrum_sum = 0.0, spectrum_prod = 0.0;

  for (int i = 0; i < options_.samples; ++i) {
    const auto [x, y, z] = sample_angles(rng, i);
    const SphericalArgs<double> args = spherical_args(x, y, z);
    const RealMat6 g = group_matrix(args);

    vs_expm = std::max(vs_expm, max_abs((g - expm(generator(x, y, z))).eval()));
    orth = std::max(orth, residual_orthogonal(g));
    det_one = std::max(det_one, std::abs(det(g) - 1.0));
    row_sums = std::max(row_sums, row_sum_identity(x, y, z));

    SphericalArgs<double> flipped = args;
    flipped.r = -flipped.r;
    flipped.px = -flipped.px;
    flipped.py = -flipped.py;
    flipped.pz = -flipped.pz;
    branch = std::max(branch, max_abs((g - group_matrix(flipped)).eval()));

    p_sum = std::max(p_sum, std::abs(args.nx + args.ny + args.nz));
    if (!args.degenerate) {
      p_sum = std::max(p_sum, std::abs(args.px + args.py + args.pz));
      p_norm = std::max(p_norm, std::abs(args.px * args.px + args.py * args.py +
                                         args.pz * args.pz - 1.5));
    }

    if (i % 4 == 0) {  // determinant residuals are the slow part
      const SpectrumReport spectrum = verify_spectrum(x, y, z);
      spectrum_det = std::max(spectrum_det, spectrum.max_det_residual());
      spectrum_sum = std::max(spectrum_sum, spectrum.sum_residual);
      spectrum_prod = std::max(spectrum_prod, spectrum.product_residual);
    }
  }

  double continuation = 0.0;
  for (int i = 0; i < std::min(options_.samples, 100); ++i) {
    const Complex x(rng.uniform(-kPi, kPi), rng.uniform(-0.1, 0.1));
    const Complex y(rng.uniform(-kPi, kPi), rng.uniform(-0.1, 0.1));
    const Complex z(rng.uniform(-kPi, kPi), rng.uniform(-0.1, 0.1));
    continuation = std::max(
        continuation, max_abs((group_matrix(x, y, z) - expm(generator(x, y, z))).eval()));
  }

  residual_check("closedform", "matches_expm", vs_expm);
  residual_check("closedform", "orthogonality", orth);
  residual_check("closedform", "det_one", det_one);
  residual_check("closedform", "row_col_sums", row_sums);
  residual_check("closedform", "branch_invariance", branch);
  residual_check("closedform", "args.p_sum_zero", p_sum);
  residual_check("closedform", "args.p_norm_three_halves", p_norm);
  residual_check("closedform", "spectrum.char_poly", spectrum_det);
  residual_check("closedform", "spectrum.sum_is_trace", spectrum_sum);
  residual_check("closedform", "spectrum.product_is_det", spectrum_prod);
  residual_check("closedform", "complex_continuation", continuation);
}

void SuiteRunner::run_u3() {
  SampleRng rng(options_.seed);
  double symmetry = 0.0, unitarity = 0.0, det_phase = 0.0, det_modulus = 0.0;
  double vs_expm = 0.0, embed_gen = 0.0, embed_group = 0.0;

  for (int i = 0; i < options_.samples; ++i) {
    const auto [x, y, z] = sample_angles(rng, i);
    const ComplexMat3 u = group_matrix_u3(x, y, z);
    symmetry = std::max(symmetry, max_abs((u - u.transpose()).eval()));
    unitarity = std::max(unitarity, residual_unitary(u));
    const Complex determinant = det(u);
    const double gamma = x + y + z;
    det_phase = std::max(det_phase,
                         std::abs(determinant - std::exp(Complex(0.0, gamma))));
    det_modulus = std::max(det_modulus, std::abs(std::abs(determinant) - 1.0));
    vs_expm = std::max(vs_expm, max_abs((u - expm(u3_generator(x, y, z))).eval()));
    embed_group = std::max(embed_group,
                           max_abs((embed_complex(u) - group_matrix(x, y, z)).eval()));
    embed_gen = std::max(
        embed_gen,
        max_abs((embed_complex(u3_generator(x, y, z)) - generator(x, y, z)).eval()));
  }

  residual_check("u3", "symmetry", symmetry);
  residual_check("u3", "unitarity", unitarity);
  residual_check("u3", "det_is_exp_i_gamma", det_phase);
  residual_check("u3", "det_modulus_one", det_modulus);
  residual_check("u3", "matches_expm", vs_expm);
  residual_check("u3", "embedding.generator", embed_gen);
  residual_check("u3", "embedding.group", embed_group);
}

void SuiteRunner::run_dynamics() {
  // Quarter-turn progressions against their expected 4-cycles.
  static const SlotStep expected_quarter[3][3][4] = {
      // axis X: X_r, Y_r, Z_r rows
      {{{1, 1}, {0, -1}, {1, -1}, {0, 1}},
       {{5, 1}, {2, -1}, {5, -1}, {2, 1}},
       {{3, 1}, {4, -1}, {3, -1}, {4, 1}}},
      // axis Y
      {{{5, 1}, {0, -1}, {5, -1}, {0, 1}},
       {{3, 1}, {2, -1}, {3, -1}, {2, 1}},
       {{1, 1}, {4, -1}, {1, -1}, {4, 1}}},
      // axis Z
      {{{3, 1}, {0, -1}, {3, -1}, {0, 1}},
       {{1, 1}, {2, -1}, {1, -1}, {2, 1}},
       {{5, 1}, {4, -1}, {5, -1}, {4, 1}}},
  };
  int quarter_mismatches = 0;
  for (int a = 0; a < 3; ++a) {
    const QuarterTurnTable table = quarter_turn_progression(static_cast<Axis>(a));
    for (int row = 0; row < 3; ++row)
      for (int step = 0; step < 4; ++step)
        if (!(table.rows[row][step] == expected_quarter[a][row][step]))
          ++quarter_mismatches;
  }
  exact_check("dynamics", "quarter_turn.progressions", quarter_mismatches);

  // Oriented-plane orbits: destination-axis table plus the -I / I landmarks.
  static const int expected_dest_c[3][6] = {{1, 2, 0, 1, 2, 0},
                                            {2, 0, 1, 2, 0, 1},
                                            {0, 1, 2, 0, 1, 2}};
  static const int expected_dest_e[3][6] = {{2, 1, 0, 2, 1, 0},
                                            {0, 2, 1, 0, 2, 1},
                                            {1, 0, 2, 1, 0, 2}};
  static const int expected_sign[6] = {-1, 1, -1, 1, -1, 1};
  int orbit_mismatches = 0;
  for (OrientedPlane plane : {OrientedPlane::minus_c, OrientedPlane::minus_e}) {
    const auto orbit = plane_orbit(plane);
    const auto& dest = plane == OrientedPlane::minus_c ? expected_dest_c
                                                       : expected_dest_e;
    for (int pair = 0; pair < 3; ++pair)
      for (int step = 0; step < 6; ++step) {
        const SlotStep lo = orbit[step][2 * pair];
        const SlotStep hi = orbit[step][2 * pair + 1];
        const bool ok = lo.slot / 2 == dest[pair][step] && hi.slot / 2 == dest[pair][step] &&
                        lo.slot % 2 == 0 && hi.slot % 2 == 1 &&
                        lo.sign == expected_sign[step] && hi.sign == expected_sign[step];
        if (!ok) ++orbit_mismatches;
      }
    for (int i = 0; i < 6; ++i) {
      if (!(orbit[2][i] == SlotStep{i, -1})) ++orbit_mismatches;  // step 3 = -I
      if (!(orbit[5][i] == SlotStep{i, +1})) ++orbit_mismatches;  // step 6 = I
    }
  }
  exact_check("dynamics", "plane_orbit.tables", orbit_mismatches);

  SampleRng rng(options_.seed);
  double norm_drift = 0.0, assoc = 0.0;
  for (int i = 0; i < std::min(options_.samples, 100); ++i) {
    const auto [x, y, z] = sample_angles(rng, i);
    const RealMat6 g = group_matrix(x, y, z);
    SixVector<double> v;
    for (int j = 0; j < 6; ++j) v[j] = rng.uniform(-1.0, 1.0);
    const double norm0 = v.norm();
    for (int step = 0; step < 20; ++step) {
      v = rotate(v, g);
      norm_drift = std::max(norm_drift, std::abs(v.norm() - norm0));
    }
    const RealMat6 g2 = group_matrix(rng.uniform(-kPi, kPi), rng.uniform(-kPi, kPi),
                                     rng.uniform(-kPi, kPi));
    assoc = std::max(assoc,
                     (rotate(v, (g * g2).eval()) - rotate(rotate(v, g), g2)).cwiseAbs().maxCoeff());
  }
  residual_check("dynamics", "rotation.norm_preserved", norm_drift);
  residual_check("dynamics", "rotation.composition", assoc);

  // Single-angle reduction to the plane circle.
  {
    const double theta = kPi / 1000.0;
    SixVector<Complex> v0 = SixVector<Complex>::Zero();
    v0[0] = Complex(1.0, 0.0);
    const Trajectory run =
        trajectory(Angles::real(theta, 0.0, 0.0), ScaleParams{}, 500, v0);
    double circle = 0.0;
    for (std::size_t k = 0; k < run.states.size(); ++k) {
      circle = std::max(circle,
                        std::abs(run.states[k][0].real() - std::cos(k * theta)));
      circle = std::max(circle,
                        std::abs(run.states[k][1].real() - std::sin(k * theta)));
      for (int j = 2; j < 6; ++j)
        circle = std::max(circle, std::abs(run.states[k][j]));
    }
    residual_check("dynamics", "trajectory.circle_reduction", circle);
  }

  residual_check("dynamics", "quadrature.loop_1d", std::abs(quadrature_check(1, 256)));
  residual_check("dynamics", "quadrature.loop_3d", std::abs(quadrature_check(3, 32)));

  double ce_det = 0.0, ce_isometry = 0.0;
  int growth_failures = 0;
  for (int i = 0; i < std::min(options_.samples, 50); ++i) {
    const auto [x, y, z] = sample_angles(rng, i);
    const double c = rng.uniform(-0.05, 0.05), e = rng.uniform(-0.05, 0.05);
    ce_det = std::max(ce_det, std::abs(det(group_matrix_ce(x, y, z, c, e)) - 1.0));
    const Eigen::VectorXd sv =
        singular_values(group_matrix_ce(x, y, z, c, -c));
    ce_isometry = std::max(ce_isometry, (sv.array() - 1.0).abs().maxCoeff());
    if (singular_values(group_matrix_ce(x, y, z, 0.01, 0.01)).maxCoeff() <= 1.0)
      ++growth_failures;
  }
  residual_check("dynamics", "scaled.det_one", ce_det);
  residual_check("dynamics", "scaled.isometry_when_e_is_minus_c", ce_isometry);
  exact_check("dynamics", "scaled.growth_exists", growth_failures);

  {
    // Waveform reproduction: growing scales must grow the state norm.
    SixVector<Complex> v0 = SixVector<Complex>::Zero();
    v0[0] = Complex(1.0, 0.0);
    const Trajectory run =
        trajectory(Angles::real(kPi / 200.0, kPi / 300.0, kPi / 500.0),
                   ScaleParams{-kPi / 30000.0, kPi / 10000.0}, 2000, v0);
    const double norm0 = run.states.front().norm();
    const double norm_end = run.states.back().norm();
    exact_check("dynamics", "scaled.waveform_growth", norm_end > norm0 ? 0 : 1);
  }
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

std::string VerifyReport::text() const {
  char line[160];
  std::string out;
  std::snprintf(line, sizeof(line),
                "verify suite=%s samples=%d seed=%llu tol=%.3e\n",
                options.suite.c_str(), options.samples,
                static_cast<unsigned long long>(options.seed), options.tol);
  out += line;
  for (const CheckResult& check : checks) {
    const std::string label = "[" + check.suite + "] " + check.name;
    if (check.exact) {
      std::snprintf(line, sizeof(line), "%-52s mismatches=%-12d %s\n", label.c_str(),
                    static_cast<int>(check.residual), check.pass ? "PASS" : "FAIL");
    } else {
      std::snprintf(line, sizeof(line), "%-52s max=%.3e bound=%.3e %s\n",
                    label.c_str(), check.residual, check.bound,
                    check.pass ? "PASS" : "FAIL");
    }
    out += line;
  }
  std::snprintf(line, sizeof(line), "result: %s\n", all_pass() ? "PASS" : "FAIL");
  out += line;
  return out;
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.samples < 1)
    throw std::invalid_argument("verify: samples must be >= 1");
  if (options.tol <= 0.0) throw std::invalid_argument("verify: tol must be > 0");

  const bool all = options.suite == "all";
  if (!all && options.suite != "group" && options.suite != "algebra" &&
      options.suite != "closedform" && options.suite != "u3" &&
      options.suite != "dynamics")
    throw std::invalid_argument("verify: unknown suite '" + options.suite + "'");

  SuiteRunner runner(options);
  if (all || options.suite == "group") runner.run_group();
  if (all || options.suite == "algebra") runner.run_algebra();
  if (all || options.suite == "closedform") runner.run_closedform();
  if (all || options.suite == "u3") runner.run_u3();
  if (all || options.suite == "dynamics") runner.run_dynamics();

  VerifyReport report;
  report.options = options;
  report.checks = std::move(runner.checks);
  return report;
}

}  // namespace cusphere
