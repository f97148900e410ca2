#include "cusphere/generators.hpp"

#include <algorithm>

#include "cusphere/group.hpp"
#include "cusphere/numerics.hpp"
#include "cusphere/rng.hpp"

namespace cusphere {

std::vector<CommutatorCheck> verify_commutator_table() {
  using L = ElementLabel;
  struct Identity {
    const char* name;
    L lhs1, lhs2;
    // rhs = first - second; same label twice encodes zero.
    L rhs1, rhs2;
  };
  static const Identity identities[] = {
      {"[b, d] = c - e", L::b, L::d, L::c, L::e},
      {"[d, b] = e - c", L::d, L::b, L::e, L::c},
      {"[d, f] = c - e", L::d, L::f, L::c, L::e},
      {"[f, d] = e - c", L::f, L::d, L::e, L::c},
      {"[f, b] = c - e", L::f, L::b, L::c, L::e},
      {"[b, f] = e - c", L::b, L::f, L::e, L::c},
      {"[b, c] = f - d", L::b, L::c, L::f, L::d},
      {"[c, b] = d - f", L::c, L::b, L::d, L::f},
      {"[d, c] = b - f", L::d, L::c, L::b, L::f},
      {"[c, d] = f - b", L::c, L::d, L::f, L::b},
      {"[f, c] = d - b", L::f, L::c, L::d, L::b},
      {"[c, f] = b - d", L::c, L::f, L::b, L::d},
      {"[b, e] = d - f", L::b, L::e, L::d, L::f},
      {"[e, b] = f - d", L::e, L::b, L::f, L::d},
      {"[d, e] = f - b", L::d, L::e, L::f, L::b},
      {"[e, d] = b - f", L::e, L::d, L::b, L::f},
      {"[f, e] = b - d", L::f, L::e, L::b, L::d},
      {"[e, f] = d - b", L::e, L::f, L::d, L::b},
      {"[c, e] = 0", L::c, L::e, L::a, L::a},
      {"[e, c] = 0", L::e, L::c, L::a, L::a},
  };

  std::vector<CommutatorCheck> report;
  report.reserve(std::size(identities));
  for (const Identity& id : identities) {
    const IntMat6 lhs = commutator(basis_matrix(id.lhs1), basis_matrix(id.lhs2));
    const IntMat6 rhs = id.rhs1 == id.rhs2
                            ? IntMat6::Zero().eval()
                            : (basis_matrix(id.rhs1) - basis_matrix(id.rhs2)).eval();
    report.push_back({id.name, lhs == rhs});
  }
  return report;
}

double LieAxiomReport::max_residual() const {
  return std::max({bilinearity, anticommutativity, jacobi_basis, jacobi_random,
                   skewness});
}

LieAxiomReport lie_axiom_check(int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("lie_axiom_check: samples must be >= 1");

  using L = ElementLabel;
  static const L span[] = {L::b, L::d, L::f, L::c, L::e};

  SampleRng rng(seed);
  auto random_combination = [&rng] {
    RealMat6 m = RealMat6::Zero();
    for (L label : span) m += rng.uniform(-1.0, 1.0) * basis_matrix(label).cast<double>();
    return m;
  };

  LieAxiomReport report;

  // Jacobi on the integer generator triple: forced to zero by associativity.
  {
    const IntMat6 bb = basis_matrix(L::b), dd = basis_matrix(L::d), ff = basis_matrix(L::f);
    const IntMat6 j = commutator(bb, commutator(dd, ff)) +
                      commutator(ff, commutator(bb, dd)) +
                      commutator(dd, commutator(ff, bb));
    report.jacobi_basis = inf_norm(j.cast<double>());
  }

  for (int i = 0; i < samples; ++i) {
    const RealMat6 x = random_combination();
    const RealMat6 y = random_combination();
    const RealMat6 z = random_combination();
    const double alpha = rng.uniform(-2.0, 2.0);
    const double beta = rng.uniform(-2.0, 2.0);

    const RealMat6 bilin_left =
        commutator((alpha * x + beta * y).eval(), z) - alpha * commutator(x, z) -
        beta * commutator(y, z);
    const RealMat6 bilin_right =
        commutator(z, (alpha * x + beta * y).eval()) - alpha * commutator(z, x) -
        beta * commutator(z, y);
    report.bilinearity = std::max({report.bilinearity, inf_norm(bilin_left),
                                   inf_norm(bilin_right)});

    report.anticommutativity = std::max(
        report.anticommutativity, inf_norm(commutator(x, y) + commutator(y, x)));

    const RealMat6 jac = commutator(x, commutator(y, z)) +
                         commutator(z, commutator(x, y)) +
                         commutator(y, commutator(z, x));
    report.jacobi_random = std::max(report.jacobi_random, inf_norm(jac));

    const RealMat6 g = generator(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0),
                                 rng.uniform(-3.0, 3.0));
    report.skewness = std::max(report.skewness, inf_norm(g.transpose() + g));
  }
  return report;
}

}  // namespace cusphere
