#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rootspace/scalar.hpp"

namespace rootspace {

/// Dense row-major rational matrix (coordinates, Gram matrices, ad maps).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of equal length).
  static RationalMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;
  RationalMatrix transpose() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalVector operator*(const RationalMatrix& a, const RationalVector& v);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;
  /// Lexicographic on (rows, cols, entries); lets matrices key ordered maps.
  friend bool operator<(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

std::string to_string(const RationalVector& v);
std::string to_string(const RationalMatrix& m);

Rational dot(const RationalVector& a, const RationalVector& b);
/// a^T G b.
Rational pairing(const RationalVector& a, const RationalMatrix& gram, const RationalVector& b);
RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a);
RationalVector operator*(const Rational& s, const RationalVector& v);
bool is_zero(const RationalVector& v);

/// Null-space basis by fraction-free Gauss-Jordan elimination.
///
/// Independent blocks of the sparsity pattern are eliminated separately, which
/// gives the same reduced form as whole-matrix elimination. One vector per
/// free column, in column order, with a 1 at that column and 0 at the other
/// free columns. Every vector is checked to annihilate the matrix.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);
std::size_t rank(const std::vector<RationalVector>& vectors);

/// Exact inverse; nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Smallest integer B with every |eigenvalue| <= B: max absolute row sum.
Integer gershgorin_bound(const RationalMatrix& m);

/// Every integer μ in [-bound, bound] with det(M - μ) = 0, in descending order.
///
/// Candidates come from the characteristic polynomial modulo two primes and
/// are confirmed by an exact kernel computation. Throws SpectrumError when
/// the kernels found do not add up to the full dimension.
std::vector<Integer> integer_eigenvalues(const RationalMatrix& m, const Integer& bound);

/// Characteristic polynomial det(xI - M) modulo p, lowest degree first.
/// Throws StructuralError if some denominator of M is divisible by p.
std::vector<std::uint64_t> charpoly_mod(const RationalMatrix& m, std::uint64_t p);

}  // namespace rootspace
