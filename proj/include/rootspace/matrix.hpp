#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rootspace/scalar.hpp"

namespace rootspace {

/// Which slice of the quaternions the entries of a matrix may use.
enum class ScalarFamily { real, complex, quaternion };

std::string to_string(ScalarFamily family);
bool respects_family(const Quaternion& q, ScalarFamily family);

/// Dense square matrix over the rationals, complex rationals or rational
/// quaternions. The family tag is fixed at construction and every write is
/// checked against it.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t n, ScalarFamily family);

  std::size_t dim() const { return n_; }
  ScalarFamily family() const { return family_; }

  const Quaternion& operator()(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
  void set(std::size_t row, std::size_t col, Quaternion value);

  bool is_zero() const;
  /// Conjugate transpose.
  Matrix adjoint() const;
  Rational real_trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Left multiplication of every entry by q; q must lie in the family.
  friend Matrix scale_left(const Quaternion& q, const Matrix& m);

 private:
  void require_compatible(const Matrix& o, const char* op) const;

  std::size_t n_ = 0;
  ScalarFamily family_ = ScalarFamily::real;
  std::vector<Quaternion> entries_;
};

/// AB - BA.
Matrix bracket(const Matrix& a, const Matrix& b);

/// Real part of trace(A B*): the Ad-invariant inner product.
Rational inner_product(const Matrix& a, const Matrix& b);

std::string to_string(const Matrix& m);

}  // namespace rootspace
