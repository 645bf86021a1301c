#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rootspace/decomposition.hpp"

namespace rootspace {

/// X + Y I, where I is a formal unit unrelated to any matrix entry.
struct ComplexElement {
  Matrix x, y;
};

bool operator==(const ComplexElement& a, const ComplexElement& b);
ComplexElement operator+(const ComplexElement& a, const ComplexElement& b);
ComplexElement operator-(const ComplexElement& a, const ComplexElement& b);
/// (a + b I) u.
ComplexElement scale(const Rational& a, const Rational& b, const ComplexElement& u);
bool is_zero(const ComplexElement& u);

ComplexElement complex_bracket(const ComplexElement& u, const ComplexElement& v);
/// (real part, I part) of <u, v>.
std::pair<Rational, Rational> complex_inner_product(const ComplexElement& u, const ComplexElement& v);

/// Complex line spanned by E + F I (sign +1) or F + E I (sign -1) of a root datum.
struct ComplexRootSpace {
  ComplexElement generator;
  std::size_t datum;
  int sign;
  RationalVector root;  // sign * root values on the torus basis
};

/// Value of the complex root at X1 + X2 I: (a(X2), -a(X1)) as (real, I) parts.
std::pair<Rational, Rational> complex_root_value(const Decomposition& dec, const ComplexRootSpace& s,
                                                  const ComplexElement& X);

/// Two spaces per root datum, + then -. The eigen relation is checked on
/// every torus basis vector; throws InvariantError if it fails.
std::vector<ComplexRootSpace> complex_root_spaces(const Decomposition& dec);

enum class ComplexCase { into_tau, into_root_space, zero };
struct ComplexBracketCase {
  ComplexCase kind;
  std::optional<std::size_t> target;  // index into the space list for into_root_space
};
ComplexBracketCase complex_bracket_case(const Decomposition& dec, const std::vector<ComplexRootSpace>& spaces,
                                        std::size_t s1, std::size_t s2);

/// Recovers the sum/difference spaces of root spaces i and j from the
/// complexified brackets and compares them with bracket_target. Throws
/// InvariantError on disagreement.
bool rootsums_via_complexification(const Decomposition& dec, std::size_t i, std::size_t j);
/// Same, reusing spaces from complex_root_spaces(dec).
bool rootsums_via_complexification(const Decomposition& dec, const std::vector<ComplexRootSpace>& spaces,
                                   std::size_t i, std::size_t j);

/// X1 + X2 I  ->  X1 + i X2 as a complex matrix; su(n) only.
Matrix identify_with_complex_matrix(const ClassicalAlgebra& algebra, const ComplexElement& u);

}  // namespace rootspace
