#include "rootspace/scalar.hpp"

#include <ostream>
#include <sstream>

#include "rootspace/errors.hpp"

namespace rootspace {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw StructuralError("rational with zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return ParseError("invalid rational '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') throw bad();
  Integer n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw bad();
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  r += o.r;
  i += o.i;
  j += o.j;
  k += o.k;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  r -= o.r;
  i -= o.i;
  j -= o.j;
  k -= o.k;
  return *this;
}

Quaternion& Quaternion::operator*=(const Rational& s) {
  r *= s;
  i *= s;
  j *= s;
  k *= s;
  return *this;
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_real()) return {a.r * b.r, a.r * b.i, a.r * b.j, a.r * b.k};
  if (b.is_real()) return {a.r * b.r, a.i * b.r, a.j * b.r, a.k * b.r};
  if (a.is_complex() && b.is_complex()) return {a.r * b.r - a.i * b.i, a.r * b.i + a.i * b.r, 0, 0};
  // Hamilton product: 𝐢𝐣 = 𝐤, 𝐣𝐤 = 𝐢, 𝐤𝐢 = 𝐣.
  return {a.r * b.r - a.i * b.i - a.j * b.j - a.k * b.k,
          a.r * b.i + a.i * b.r + a.j * b.k - a.k * b.j,
          a.r * b.j - a.i * b.k + a.j * b.r + a.k * b.i,
          a.r * b.k + a.i * b.j - a.j * b.i + a.k * b.r};
}

Rational real_pairing(const Quaternion& a, const Quaternion& b) {
  Rational s;
  if (sgn(a.r) != 0 && sgn(b.r) != 0) s += a.r * b.r;
  if (sgn(a.i) != 0 && sgn(b.i) != 0) s += a.i * b.i;
  if (sgn(a.j) != 0 && sgn(b.j) != 0) s += a.j * b.j;
  if (sgn(a.k) != 0 && sgn(b.k) != 0) s += a.k * b.k;
  return s;
}

std::string to_string(const Quaternion& q) {
  if (q.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rational& c, const char* unit) {
    if (sgn(c) == 0) return;
    Rational mag = abs(c);
    if (!first || sgn(c) < 0) os << (sgn(c) < 0 ? (first ? "-" : " - ") : " + ");
    if (*unit == '\0' || mag != 1) os << mag.get_str();
    os << unit;
    first = false;
  };
  term(q.r, "");
  term(q.i, "i");
  term(q.j, "j");
  term(q.k, "k");
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << to_string(q); }

}  // namespace rootspace
