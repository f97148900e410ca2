#include "cusphere/numerics.hpp"

#include <doctest.h>

#include "cusphere/closed_form.hpp"
#include "cusphere/generators.hpp"
#include "cusphere/group.hpp"
#include "cusphere/rng.hpp"
#include "test_helpers.hpp"

using namespace cusphere;
using cusphere::testing::taylor_expm;

TEST_CASE("expm of zero is the identity") {
  CHECK(max_abs((expm(RealMat6::Zero().eval()) - RealMat6::Identity()).eval()) == 0.0);
}

TEST_CASE("expm of the planar generator is the rotation matrix") {
  SampleRng rng(21);
  for (int i = 0; i < 100; ++i) {
    const double theta = rng.uniform(-10.0, 10.0);
    Mat2<double> gen;
    gen << 0.0, -theta, theta, 0.0;
    Mat2<double> expected;
    expected << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    CHECK(max_abs((expm(gen) - expected).eval()) <= 1e-13);
  }
}

TEST_CASE("expm agrees with the independent series oracle") {
  // The frozen reference point first, then random angles of moderate norm.
  const RealMat6 g = generator(0.3, -0.7, 1.1);
  CHECK(max_abs((expm(g) - taylor_expm(g)).eval()) <= 1e-12);

  SampleRng rng(22);
  for (int i = 0; i < 100; ++i) {
    const RealMat6 gi = generator(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                                  rng.uniform(-2.0, 2.0));
    CHECK(max_abs((expm(gi) - taylor_expm(gi)).eval()) <= 1e-12);
  }
}

TEST_CASE("expm agrees with the oracle on complex matrices") {
  SampleRng rng(23);
  for (int i = 0; i < 50; ++i) {
    const ComplexMat6 g = generator(Complex(rng.uniform(-1.5, 1.5), rng.uniform(-0.3, 0.3)),
                                    Complex(rng.uniform(-1.5, 1.5), rng.uniform(-0.3, 0.3)),
                                    Complex(rng.uniform(-1.5, 1.5), rng.uniform(-0.3, 0.3)));
    CHECK(max_abs((expm(g) - taylor_expm(g)).eval()) <= 1e-12);
  }
}

TEST_CASE("expm holds its accuracy contract up to inf-norm 20") {
  // The closed form is plain scalar trigonometry, accurate to a few ulp at
  // any angle, so it serves as the reference at norms the series oracle
  // cannot reach.
  SampleRng rng(28);
  for (int i = 0; i < 100; ++i) {
    const double x = rng.uniform(-6.6, 6.6), y = rng.uniform(-6.6, 6.6),
                 z = rng.uniform(-6.6, 6.6);
    const RealMat6 g = generator(x, y, z);  // inf-norm up to 3 * 6.6
    CHECK(max_abs((expm(g) - group_matrix(x, y, z)).eval()) <= 1e-13);
  }
}

TEST_CASE("expm is multiplicative on commuting arguments") {
  SampleRng rng(24);
  for (int i = 0; i < 50; ++i) {
    const RealMat6 g = generator(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                                 rng.uniform(-1.0, 1.0));
    const double s = rng.uniform(-2.0, 2.0), t = rng.uniform(-2.0, 2.0);
    const RealMat6 lhs = expm((s * g).eval()) * expm((t * g).eval());
    const RealMat6 rhs = expm(((s + t) * g).eval());
    CHECK(max_abs((lhs - rhs).eval()) <= 1e-12);
  }
}

TEST_CASE("expm of a skew matrix is special orthogonal") {
  SampleRng rng(25);
  for (int i = 0; i < 100; ++i) {
    const RealMat6 g = generator(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0),
                                 rng.uniform(-3.0, 3.0));
    const RealMat6 e = expm(g);
    CHECK(residual_orthogonal(e) <= 1e-12);
    CHECK(std::abs(det(e) - 1.0) <= 1e-12);
  }
}

TEST_CASE("expm of a trace-free matrix has unit determinant") {
  SampleRng rng(26);
  for (int i = 0; i < 100; ++i) {
    const RealMat6 g =
        generator_ce(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0),
                     rng.uniform(-3.0, 3.0), rng.uniform(-0.1, 0.1), rng.uniform(-0.1, 0.1));
    CHECK(std::abs(det(expm(g)) - 1.0) <= 1e-10);
  }
}

TEST_CASE("determinant") {
  CHECK(det(RealMat6::Identity().eval()) == 1.0);
  CHECK(std::abs(det(rot2_reference(0.0, 0.83)) - 1.0) <= 1e-14);
  // The b permutation is three planar rotation blocks, each of determinant 1.
  CHECK(std::abs(det(basis_matrix(ElementLabel::b).cast<double>().eval()) - 1.0) <= 1e-14);

  SampleRng rng(27);
  for (int i = 0; i < 100; ++i) {
    RealMat6 m, n;
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c) {
        m(r, c) = rng.uniform(-1.0, 1.0);
        n(r, c) = rng.uniform(-1.0, 1.0);
      }
    const double lhs = det((m * n).eval());
    const double rhs = det(m) * det(n);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("orthogonality and unitarity residuals") {
  CHECK(residual_orthogonal(RealMat6::Identity().eval()) == 0.0);
  CHECK(residual_unitary(ComplexMat3::Identity().eval()) == 0.0);

  RealMat6 stretched = RealMat6::Identity();
  stretched(0, 0) = 2.0;  // residual forced to |2^2 - 1| = 3
  CHECK(residual_orthogonal(stretched) == 3.0);
}

TEST_CASE("norms") {
  RealMat6 m = RealMat6::Zero();
  m(2, 1) = -4.0;
  m(2, 4) = 3.0;
  m(5, 0) = 6.0;
  CHECK(inf_norm(m) == 7.0);
  CHECK(one_norm(m) == 6.0);
  CHECK(max_abs(m) == 6.0);
}

TEST_CASE("expm rejects bad input and reports overflow") {
  RealMat6 bad = RealMat6::Zero();
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(expm(bad), std::invalid_argument);

  Eigen::MatrixXd rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(expm(rect), std::invalid_argument);

  // e^900 overflows the double range; the failure must be reported, not
  // returned as inf.
  Mat2<double> huge;
  huge << 900.0, 0.0, 0.0, 900.0;
  CHECK_THROWS_AS(expm(huge), std::overflow_error);

  // A skew matrix of the same norm stays bounded and must still work.
  Mat2<double> spin;
  spin << 0.0, -900.0, 900.0, 0.0;
  CHECK(residual_orthogonal(expm(spin)) <= 1e-9);
}

TEST_CASE("singular values of an orthogonal matrix are ones") {
  const RealMat6 e = expm(generator(0.4, -1.2, 0.9));
  const Eigen::VectorXd sv = singular_values(e);
  CHECK(sv.size() == 6);
  CHECK((sv.array() - 1.0).abs().maxCoeff() <= 1e-12);
}
