#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace rootspace {

/// Arbitrary-precision rational; gmpxx keeps results canonical.
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

Rational make_rational(long numerator, long denominator = 1);
bool is_integer(const Rational& q);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws ParseError on anything else or q == 0.
Rational parse_rational(std::string_view text);

/// r + i*𝐢 + j*𝐣 + k*𝐤 with rational coefficients.
///
/// The one scalar type for every matrix entry; complex numbers are the
/// j = k = 0 slice and reals the i = j = k = 0 slice.
struct Quaternion {
  Rational r, i, j, k;

  Quaternion() = default;
  Quaternion(Rational real) : r(std::move(real)) {}  // NOLINT(implicit)
  Quaternion(Rational real, Rational ci, Rational cj, Rational ck)
      : r(std::move(real)), i(std::move(ci)), j(std::move(cj)), k(std::move(ck)) {}

  static Quaternion unit_i() { return {0, 1, 0, 0}; }
  static Quaternion unit_j() { return {0, 0, 1, 0}; }
  static Quaternion unit_k() { return {0, 0, 0, 1}; }

  bool is_zero() const { return sgn(r) == 0 && sgn(i) == 0 && sgn(j) == 0 && sgn(k) == 0; }
  bool is_real() const { return sgn(i) == 0 && sgn(j) == 0 && sgn(k) == 0; }
  bool is_complex() const { return sgn(j) == 0 && sgn(k) == 0; }

  Quaternion conj() const { return {r, -i, -j, -k}; }

  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(const Rational& s);

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator-(const Quaternion& a) { return {-a.r, -a.i, -a.j, -a.k}; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator*(const Rational& s, Quaternion a) { return a *= s; }
  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.r == b.r && a.i == b.i && a.j == b.j && a.k == b.k;
  }
};

/// Real part of a * conj(b), i.e. the Euclidean pairing of coefficients.
Rational real_pairing(const Quaternion& a, const Quaternion& b);

std::string to_string(const Quaternion& q);
std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace rootspace
