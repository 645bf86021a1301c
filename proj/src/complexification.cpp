#include "rootspace/complexification.hpp"

#include "rootspace/errors.hpp"

namespace rootspace {

namespace {

std::string d_label(const Decomposition& dec, std::size_t datum) { return dec.root_data().at(datum).label; }

}  // namespace

bool operator==(const ComplexElement& a, const ComplexElement& b) { return a.x == b.x && a.y == b.y; }

ComplexElement operator+(const ComplexElement& a, const ComplexElement& b) { return {a.x + b.x, a.y + b.y}; }

ComplexElement operator-(const ComplexElement& a, const ComplexElement& b) { return {a.x - b.x, a.y - b.y}; }

ComplexElement scale(const Rational& a, const Rational& b, const ComplexElement& u) {
  return {a * u.x - b * u.y, a * u.y + b * u.x};
}

bool is_zero(const ComplexElement& u) { return u.x.is_zero() && u.y.is_zero(); }

ComplexElement complex_bracket(const ComplexElement& u, const ComplexElement& v) {
  return {bracket(u.x, v.x) - bracket(u.y, v.y), bracket(u.x, v.y) + bracket(u.y, v.x)};
}

std::pair<Rational, Rational> complex_inner_product(const ComplexElement& u, const ComplexElement& v) {
  return {inner_product(u.x, v.x) + inner_product(u.y, v.y), inner_product(u.y, v.x) - inner_product(u.x, v.y)};
}

std::pair<Rational, Rational> complex_root_value(const Decomposition& dec, const ComplexRootSpace& s,
                                                  const ComplexElement& X) {
  const Rational re = dec.root_value(s.datum, X.y);
  const Rational im = -dec.root_value(s.datum, X.x);
  return {s.sign * re, s.sign * im};
}

std::vector<ComplexRootSpace> complex_root_spaces(const Decomposition& dec) {
  const ClassicalAlgebra& a = dec.algebra();
  const Matrix zero(a.matrix_dim(), a.scalars());
  std::vector<ComplexRootSpace> out;
  for (std::size_t i = 0; i < dec.size(); ++i) {
    const RootDatum& d = dec.root_data()[i];
    out.push_back({{d.E, d.F}, i, 1, d.root_coords});
    out.push_back({{d.F, d.E}, i, -1, -d.root_coords});
  }
  for (const auto& s : out)
    for (const auto& h : a.torus_basis()) {
      const ComplexElement X{h.matrix, zero};
      const auto [re, im] = complex_root_value(dec, s, X);
      if (!(complex_bracket(X, s.generator) == scale(re, im, s.generator)))
        throw InvariantError("complex root space of " + d_label(dec, s.datum) + " is not an eigenline");
    }
  return out;
}

ComplexBracketCase complex_bracket_case(const Decomposition& dec, const std::vector<ComplexRootSpace>& spaces,
                                        std::size_t s1, std::size_t s2) {
  const ClassicalAlgebra& a = dec.algebra();
  const ComplexElement br = complex_bracket(spaces.at(s1).generator, spaces.at(s2).generator);
  const RationalVector sum = spaces[s1].root + spaces[s2].root;
  if (is_zero(sum)) {
    if (!a.contains(br.x) || !a.contains(br.y)) throw InvariantError("complex bracket outside the algebra");
    for (const Matrix* part : {&br.x, &br.y}) {
      const RationalVector c = a.coordinates(*part);
      for (std::size_t k = a.rank(); k < c.size(); ++k)
        if (sgn(c[k]) != 0) throw InvariantError("bracket of opposite complex root spaces leaves the torus");
    }
    return {ComplexCase::into_tau, std::nullopt};
  }
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    if (spaces[k].root != sum) continue;
    const ComplexElement& g = spaces[k].generator;
    const Rational n = inner_product(g.x, g.x);
    const Rational re = inner_product(br.x, g.x) / n;
    const Rational im = -inner_product(br.x, g.y) / n;
    if (!(scale(re, im, g) == br)) throw InvariantError("complex bracket is not in the sum root space");
    return {ComplexCase::into_root_space, k};
  }
  if (!is_zero(br)) throw InvariantError("complex bracket is nonzero although the root sum is not a root");
  return {ComplexCase::zero, std::nullopt};
}

bool rootsums_via_complexification(const Decomposition& dec, std::size_t i, std::size_t j) {
  return rootsums_via_complexification(dec, complex_root_spaces(dec), i, j);
}

bool rootsums_via_complexification(const Decomposition& dec, const std::vector<ComplexRootSpace>& spaces,
                                   std::size_t i, std::size_t j) {
  const BracketTarget expected = bracket_target(dec, i, j);
  if (spaces.size() != 2 * dec.size()) throw StructuralError("complex root spaces do not match the decomposition");
  // E_j + F_j I spans the root a_j; F_j + E_j I = I (E_j - F_j I) spans -a_j.
  const ComplexBracketCase plus = complex_bracket_case(dec, spaces, 2 * i, 2 * j);
  const ComplexBracketCase minus = complex_bracket_case(dec, spaces, 2 * i, 2 * j + 1);

  auto agrees = [&](const ComplexBracketCase& c, const std::optional<BracketTarget::Match>& m) {
    if (c.kind == ComplexCase::into_tau) return false;
    if ((c.kind == ComplexCase::into_root_space) != m.has_value()) return false;
    if (!m) return true;
    return spaces[*c.target].datum == m->index && spaces[*c.target].sign == m->sign;
  };
  if (!agrees(plus, expected.plus) || !agrees(minus, expected.minus))
    throw InvariantError("complexified root sums disagree with bracket_target for " + d_label(dec, i) + ", " +
                         d_label(dec, j));

  // Real part of the two brackets is 2[E_i, E_j]; it must sit in the predicted spaces.
  const auto& gi = spaces[2 * i].generator;
  const ComplexElement with_plus = complex_bracket(gi, spaces[2 * j].generator);
  const ComplexElement with_minus = scale(0, -1, complex_bracket(gi, spaces[2 * j + 1].generator));
  const Matrix twice = (with_plus + with_minus).x;
  const Matrix direct = Rational(2) * bracket(dec.root_data()[i].E, dec.root_data()[j].E);
  if (!(twice == direct)) throw InvariantError("complexified bracket does not reproduce 2[E_i, E_j]");
  Matrix rest = direct;
  if (expected.plus) rest -= project(dec, expected.plus->index, direct);
  if (expected.minus) rest -= project(dec, expected.minus->index, direct);
  if (!rest.is_zero()) throw InvariantError("2[E_i, E_j] leaves the sum/difference spaces");
  return true;
}

Matrix identify_with_complex_matrix(const ClassicalAlgebra& algebra, const ComplexElement& u) {
  if (algebra.family() != Family::SU) throw StructuralError("complex matrix identification is implemented for su(n) only");
  return u.x + scale_left(Quaternion::unit_i(), u.y);
}

}  // namespace rootspace
