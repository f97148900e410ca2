#pragma once

/// The order-12 finite group of signed 6x6 permutation matrices generated by
/// the three imaginary elements b, d, f (each squares to -I). The real
/// elements c and e are derived as c = -b*f and e = -b*d; a is the identity.
/// All products are evaluated at integer precision, so every identity here is
/// exact.

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cusphere/types.hpp"

namespace cusphere {

enum class ElementLabel : int { a = 0, b, c, d, e, f };

inline constexpr std::array<ElementLabel, 6> kAllLabels = {
    ElementLabel::a, ElementLabel::b, ElementLabel::c,
    ElementLabel::d, ElementLabel::e, ElementLabel::f};

char to_char(ElementLabel label);
std::optional<ElementLabel> label_from_char(char c);

/// One of the twelve group elements: a signed label.
struct SignedElement {
  ElementLabel label = ElementLabel::a;
  int sign = +1;

  SignedElement negated() const { return {label, -sign}; }
  friend bool operator==(const SignedElement&, const SignedElement&) = default;
};

/// "a", "-c", ... (unsigned positives, Cayley-table style).
std::string to_token(const SignedElement& el);
/// "+a", "-c", ... (always signed).
std::string to_signed_token(const SignedElement& el);
std::optional<SignedElement> element_from_token(std::string_view token);

struct NotAGroupElement : std::domain_error {
  using std::domain_error::domain_error;
};

/// Canonical matrix for a label. b, d, f are fixed constants; a = I,
/// c = -b*f and e = -b*d.
const IntMat6& basis_matrix(ElementLabel label);
IntMat6 matrix_of(const SignedElement& el);

/// Inverse of matrix_of. Throws NotAGroupElement when m is none of the
/// twelve group matrices.
SignedElement identify(const IntMat6& m);
std::optional<SignedElement> try_identify(const IntMat6& m);

/// Group product, evaluated through the matrix representation.
SignedElement multiply(const SignedElement& lhs, const SignedElement& rhs);

/// Row r, column s holds the product r*s of the positive elements.
using CayleyTable = std::array<std::array<SignedElement, 6>, 6>;
CayleyTable cayley_table();

/// The hand-transcribed reference grid the computed table must reproduce.
const CayleyTable& cayley_reference();

struct RelationCheck {
  std::string relation;  // e.g. "b^2 = -1"
  bool confirmed = false;
  std::string actual;    // reduced left side, e.g. "+a"
};

/// Evaluates the claimed relation list against the matrix representation.
/// The two cube relations ("c^3 = -1", "e^3 = -1") contradict the Cayley
/// table itself; the audit reports the matrix truth (+a) instead of patching
/// either side.
std::vector<RelationCheck> relation_audit();

/// Closure of {b, d, f} under multiplication: exactly the twelve signed
/// elements, sorted by (label, sign).
std::vector<SignedElement> enumerate_group();

/// Product of the labels' matrices left to right; the empty word is +a.
SignedElement reduce_word(std::span<const ElementLabel> word);
/// Parses words like "bfdbdbfb". Throws std::invalid_argument on bad letters.
SignedElement reduce_word(std::string_view word);

/// exp(scale) * [[cos, -sin], [sin, cos]]: the 2x2 complex-rotation
/// reference the 6-dimensional construction generalizes.
Mat2<double> rot2_reference(double scale, double angle);
/// [[cosh, sinh], [sinh, cosh]], determinant cosh^2 - sinh^2 = 1.
Mat2<double> rot2_hyperbolic(double angle);

/// 6x6 grid of signed labels; disengaged cells are zero slots.
using LayoutTable = std::array<std::array<std::optional<SignedElement>, 6>, 6>;

/// Full positional layout with the identity on the diagonal
/// (row 1 = [a, -b, c, -f, e, -d]).
const LayoutTable& adjoint_layout();
/// adjoint_layout with the real slots a, c, e removed; the scalar-substituted
/// form of this grid is the negative of the canonical generator.
const LayoutTable& generator_layout();

/// Substitutes values[label] for each occupied cell (zero elsewhere).
template <typename Scalar>
Mat6<Scalar> layout_substitute(const LayoutTable& layout,
                               const std::array<Scalar, 6>& values) {
  Mat6<Scalar> m = Mat6<Scalar>::Zero();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (layout[i][j]) {
        const SignedElement& cell = *layout[i][j];
        m(i, j) = Scalar(cell.sign) * values[static_cast<int>(cell.label)];
      }
  return m;
}

}  // namespace cusphere
