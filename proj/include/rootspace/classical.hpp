#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rootspace/linalg.hpp"
#include "rootspace/matrix.hpp"

namespace rootspace {

enum class Family { SU, SO_even, SO_odd, Sp };

struct NamedElement {
  std::string name;
  Matrix matrix;
};

/// su(n), so(2n), so(2n+1) or sp(n) with its standard torus and named basis.
///
/// Canonical order: torus basis first, then root-space pairs. Pairs within a
/// letter group are ordered by index distance, then by first index (12, 23,
/// 34, 13, 24, 14), which is the order the su(3) bracket table uses.
class ClassicalAlgebra {
 public:
  Family family() const { return family_; }
  int n() const { return n_; }
  std::size_t matrix_dim() const { return matrix_dim_; }
  ScalarFamily scalars() const { return scalars_; }
  std::size_t rank() const { return torus_.size(); }
  std::size_t dim() const { return torus_.size() + offtorus_.size(); }
  /// "su(3)", "so(5)", "sp(2)".
  std::string name() const;

  const std::vector<NamedElement>& torus_basis() const { return torus_; }
  /// Consecutive entries (2k, 2k+1) span one root space.
  const std::vector<NamedElement>& offtorus_basis() const { return offtorus_; }
  const NamedElement& basis_element(std::size_t index) const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Any generator by name, including reversed index pairs (E_21 = -E_12).
  Matrix element(std::string_view name) const;
  Matrix torus_vector(const RationalVector& coefficients) const;
  const RationalMatrix& torus_gram() const { return gram_; }

  /// <m, basis element>, using only that element's support.
  Rational pairing_with_basis(const Matrix& m, std::size_t index) const;
  /// Coordinates in the full canonical basis. Throws if m is outside the algebra.
  RationalVector coordinates(const Matrix& m) const;
  /// Coordinates in the torus basis. Throws if m is not in the torus.
  RationalVector torus_coordinates(const Matrix& m) const;
  Matrix combination(const RationalVector& coordinates) const;
  bool contains(const Matrix& m) const;

  /// Torus coordinates to diagonal parameters: the lambda-tuple (sum zero)
  /// for SU, the rotation angles theta otherwise.
  RationalVector diagonal_parameters(const RationalVector& torus_coords) const;
  RationalVector torus_from_diagonal(const RationalVector& parameters) const;

  friend ClassicalAlgebra build(Family family, int n);

 private:
  struct Support {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    Rational norm_sq;
  };

  void add(std::vector<NamedElement>& into, std::string name, Matrix m);
  std::optional<RationalVector> try_coordinates(const Matrix& m) const;

  Family family_ = Family::SU;
  int n_ = 0;
  std::size_t matrix_dim_ = 0;
  ScalarFamily scalars_ = ScalarFamily::complex;
  std::vector<NamedElement> torus_, offtorus_;
  std::vector<Support> support_;  // canonical order
  RationalMatrix gram_, gram_inverse_;
};

/// Throws StructuralError for unsupported parameters.
ClassicalAlgebra build(Family family, int n);

std::string to_string(Family family);
/// Index suffix of a generator name: "12", or "10,11" once an index needs two digits.
std::string index_suffix(int i, int j);
std::string index_suffix(int i);

}  // namespace rootspace
