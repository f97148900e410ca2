#include "cusphere/group.hpp"

#include <algorithm>
#include <cmath>

namespace cusphere {

namespace {

IntMat6 make_b() {
  IntMat6 m;
  m << 0, -1, 0, 0, 0, 0,
       1, 0, 0, 0, 0, 0,
       0, 0, 0, 0, 0, -1,
       0, 0, 0, 0, 1, 0,
       0, 0, 0, -1, 0, 0,
       0, 0, 1, 0, 0, 0;
  return m;
}

IntMat6 make_d() {
  IntMat6 m;
  m << 0, 0, 0, 0, 0, -1,
       0, 0, 0, 0, 1, 0,
       0, 0, 0, -1, 0, 0,
       0, 0, 1, 0, 0, 0,
       0, -1, 0, 0, 0, 0,
       1, 0, 0, 0, 0, 0;
  return m;
}

IntMat6 make_f() {
  IntMat6 m;
  m << 0, 0, 0, -1, 0, 0,
       0, 0, 1, 0, 0, 0,
       0, -1, 0, 0, 0, 0,
       1, 0, 0, 0, 0, 0,
       0, 0, 0, 0, 0, -1,
       0, 0, 0, 0, 1, 0;
  return m;
}

const std::array<IntMat6, 6>& all_basis_matrices() {
  static const std::array<IntMat6, 6> mats = [] {
    std::array<IntMat6, 6> m;
    m[static_cast<int>(ElementLabel::a)] = IntMat6::Identity();
    m[static_cast<int>(ElementLabel::b)] = make_b();
    m[static_cast<int>(ElementLabel::d)] = make_d();
    m[static_cast<int>(ElementLabel::f)] = make_f();
    // The real elements are products of the imaginary ones, never transcribed.
    m[static_cast<int>(ElementLabel::c)] =
        -(m[static_cast<int>(ElementLabel::b)] * m[static_cast<int>(ElementLabel::f)]);
    m[static_cast<int>(ElementLabel::e)] =
        -(m[static_cast<int>(ElementLabel::b)] * m[static_cast<int>(ElementLabel::d)]);
    return m;
  }();
  return mats;
}

SignedElement pos(ElementLabel l) { return {l, +1}; }
SignedElement neg(ElementLabel l) { return {l, -1}; }

}  // namespace

char to_char(ElementLabel label) {
  return static_cast<char>('a' + static_cast<int>(label));
}

std::optional<ElementLabel> label_from_char(char c) {
  if (c < 'a' || c > 'f') return std::nullopt;
  return static_cast<ElementLabel>(c - 'a');
}

std::string to_token(const SignedElement& el) {
  std::string s;
  if (el.sign < 0) s += '-';
  s += to_char(el.label);
  return s;
}

std::string to_signed_token(const SignedElement& el) {
  std::string s(1, el.sign < 0 ? '-' : '+');
  s += to_char(el.label);
  return s;
}

std::optional<SignedElement> element_from_token(std::string_view token) {
  int sign = +1;
  if (!token.empty() && (token.front() == '-' || token.front() == '+')) {
    sign = token.front() == '-' ? -1 : +1;
    token.remove_prefix(1);
  }
  if (token.size() != 1) return std::nullopt;
  auto label = label_from_char(token.front());
  if (!label) return std::nullopt;
  return SignedElement{*label, sign};
}

const IntMat6& basis_matrix(ElementLabel label) {
  return all_basis_matrices()[static_cast<int>(label)];
}

IntMat6 matrix_of(const SignedElement& el) {
  return el.sign * basis_matrix(el.label);
}

std::optional<SignedElement> try_identify(const IntMat6& m) {
  for (ElementLabel label : kAllLabels) {
    const IntMat6& base = basis_matrix(label);
    if (m == base) return pos(label);
    if (m == -base) return neg(label);
  }
  return std::nullopt;
}

SignedElement identify(const IntMat6& m) {
  if (auto el = try_identify(m)) return *el;
  throw NotAGroupElement("matrix is not one of the twelve group elements");
}

SignedElement multiply(const SignedElement& lhs, const SignedElement& rhs) {
  return identify(matrix_of(lhs) * matrix_of(rhs));
}

CayleyTable cayley_table() {
  CayleyTable table;
  for (int r = 0; r < 6; ++r)
    for (int s = 0; s < 6; ++s)
      table[r][s] = multiply(pos(kAllLabels[r]), pos(kAllLabels[s]));
  return table;
}

const CayleyTable& cayley_reference() {
  using L = ElementLabel;
  static const CayleyTable table = {{
      {{pos(L::a), pos(L::b), pos(L::c), pos(L::d), pos(L::e), pos(L::f)}},
      {{pos(L::b), neg(L::a), pos(L::f), neg(L::e), pos(L::d), neg(L::c)}},
      {{pos(L::c), pos(L::d), pos(L::e), pos(L::f), pos(L::a), pos(L::b)}},
      {{pos(L::d), neg(L::c), pos(L::b), neg(L::a), pos(L::f), neg(L::e)}},
      {{pos(L::e), pos(L::f), pos(L::a), pos(L::b), pos(L::c), pos(L::d)}},
      {{pos(L::f), neg(L::e), pos(L::d), neg(L::c), pos(L::b), neg(L::a)}},
  }};
  return table;
}

std::vector<RelationCheck> relation_audit() {
  using L = ElementLabel;
  struct Relation {
    const char* name;
    std::vector<SignedElement> lhs;
    std::vector<SignedElement> rhs;
  };
  const std::vector<Relation> relations = {
      {"b^2 = -1", {pos(L::b), pos(L::b)}, {neg(L::a)}},
      {"d^2 = -1", {pos(L::d), pos(L::d)}, {neg(L::a)}},
      {"f^2 = -1", {pos(L::f), pos(L::f)}, {neg(L::a)}},
      {"bd = -e", {pos(L::b), pos(L::d)}, {neg(L::e)}},
      {"df = -e", {pos(L::d), pos(L::f)}, {neg(L::e)}},
      {"fb = -e", {pos(L::f), pos(L::b)}, {neg(L::e)}},
      {"bf = -c", {pos(L::b), pos(L::f)}, {neg(L::c)}},
      {"fd = -c", {pos(L::f), pos(L::d)}, {neg(L::c)}},
      {"db = -c", {pos(L::d), pos(L::b)}, {neg(L::c)}},
      {"bf = fd", {pos(L::b), pos(L::f)}, {pos(L::f), pos(L::d)}},
      {"df = fb", {pos(L::d), pos(L::f)}, {pos(L::f), pos(L::b)}},
      {"bd = df", {pos(L::b), pos(L::d)}, {pos(L::d), pos(L::f)}},
      {"e^3 = -1", {pos(L::e), pos(L::e), pos(L::e)}, {neg(L::a)}},
      {"c^3 = -1", {pos(L::c), pos(L::c), pos(L::c)}, {neg(L::a)}},
      {"ce = 1", {pos(L::c), pos(L::e)}, {pos(L::a)}},
      {"(-c)(-e) = 1", {neg(L::c), neg(L::e)}, {pos(L::a)}},
  };

  auto reduce = [](const std::vector<SignedElement>& product) {
    IntMat6 m = IntMat6::Identity();
    for (const SignedElement& el : product) m = (m * matrix_of(el)).eval();
    return identify(m);
  };

  std::vector<RelationCheck> report;
  report.reserve(relations.size());
  for (const Relation& rel : relations) {
    const SignedElement lhs = reduce(rel.lhs);
    const SignedElement rhs = reduce(rel.rhs);
    report.push_back({rel.name, lhs == rhs, to_signed_token(lhs)});
  }
  return report;
}

std::vector<SignedElement> enumerate_group() {
  std::vector<SignedElement> found = {pos(ElementLabel::b), pos(ElementLabel::d),
                                      pos(ElementLabel::f)};
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t n = found.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const SignedElement p = multiply(found[i], found[j]);
        if (std::find(found.begin(), found.end(), p) == found.end()) {
          found.push_back(p);
          grew = true;
        }
      }
  }
  std::sort(found.begin(), found.end(), [](const SignedElement& x, const SignedElement& y) {
    if (x.label != y.label) return x.label < y.label;
    return x.sign > y.sign;
  });
  return found;
}

SignedElement reduce_word(std::span<const ElementLabel> word) {
  IntMat6 m = IntMat6::Identity();
  for (ElementLabel label : word) m = (m * basis_matrix(label)).eval();
  return identify(m);
}

SignedElement reduce_word(std::string_view word) {
  std::vector<ElementLabel> labels;
  labels.reserve(word.size());
  for (char c : word) {
    auto label = label_from_char(c);
    if (!label) throw std::invalid_argument("reduce_word: bad letter in word");
    labels.push_back(*label);
  }
  return reduce_word(std::span<const ElementLabel>(labels));
}

Mat2<double> rot2_reference(double scale, double angle) {
  Mat2<double> m;
  m << std::cos(angle), -std::sin(angle),
       std::sin(angle), std::cos(angle);
  return std::exp(scale) * m;
}

Mat2<double> rot2_hyperbolic(double angle) {
  Mat2<double> m;
  m << std::cosh(angle), std::sinh(angle),
       std::sinh(angle), std::cosh(angle);
  return m;
}

const LayoutTable& adjoint_layout() {
  using L = ElementLabel;
  static const LayoutTable table = {{
      {{pos(L::a), neg(L::b), pos(L::c), neg(L::f), pos(L::e), neg(L::d)}},
      {{pos(L::b), pos(L::a), pos(L::f), pos(L::c), pos(L::d), pos(L::e)}},
      {{pos(L::e), neg(L::f), pos(L::a), neg(L::d), pos(L::c), neg(L::b)}},
      {{pos(L::f), pos(L::e), pos(L::d), pos(L::a), pos(L::b), pos(L::c)}},
      {{pos(L::c), neg(L::d), pos(L::e), neg(L::b), pos(L::a), neg(L::f)}},
      {{pos(L::d), pos(L::c), pos(L::b), pos(L::e), pos(L::f), pos(L::a)}},
  }};
  return table;
}

const LayoutTable& generator_layout() {
  static const LayoutTable table = [] {
    LayoutTable t = adjoint_layout();
    for (auto& row : t)
      for (auto& cell : row)
        if (cell && (cell->label == ElementLabel::a || cell->label == ElementLabel::c ||
                     cell->label == ElementLabel::e))
          cell.reset();
    return t;
  }();
  return table;
}

}  // namespace cusphere
