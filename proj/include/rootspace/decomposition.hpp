#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rootspace/classical.hpp"

namespace rootspace {

/// One root space with an oriented basis {E, F}: [X, E] = a(X) F and
/// [X, F] = -a(X) E for X in the torus.
struct RootDatum {
  Matrix E, F;
  Rational norm_sq;              // <E,E> = <F,F>
  Matrix dual_root;              // [E,F] / norm_sq
  RationalVector dual_coords;    // dual root in the torus basis
  RationalVector root_coords;    // root values on the torus basis
  std::size_t leading = 0;       // first off-torus basis index in the support of E
  std::string label;             // "alpha_12", "-gamma_3", ...
};

class Decomposition {
 public:
  Decomposition(std::shared_ptr<const ClassicalAlgebra> algebra, RationalVector regular_coords, Matrix regular_X,
                std::vector<RootDatum> data);

  const ClassicalAlgebra& algebra() const { return *algebra_; }
  std::shared_ptr<const ClassicalAlgebra> algebra_ptr() const { return algebra_; }
  const Matrix& regular_X() const { return regular_X_; }
  const RationalVector& regular_coords() const { return regular_coords_; }
  const std::vector<RootDatum>& root_data() const { return data_; }
  std::size_t size() const { return data_.size(); }
  /// dim g - rank; always twice the number of root spaces.
  std::size_t s() const { return algebra_->dim() - algebra_->rank(); }

  /// Root value a_i(X) = <dual root, X>.
  Rational root_value(std::size_t i, const Matrix& X) const;
  /// The root space index whose dual root is v or -v, with that sign.
  std::optional<std::pair<std::size_t, int>> find_dual(const RationalVector& coords) const;

 private:
  std::shared_ptr<const ClassicalAlgebra> algebra_;
  RationalVector regular_coords_;
  Matrix regular_X_;
  std::vector<RootDatum> data_;
};

/// Distinct candidate torus coordinates in the order they are tried; fewer
/// than `count` when the rank is too small to supply that many.
std::vector<RationalVector> regular_candidates(const ClassicalAlgebra& algebra, std::size_t count);

/// First candidate at which the decomposition succeeds.
Matrix strongly_regular_vector(const ClassicalAlgebra& algebra);

/// Decomposition at the given torus coordinates; throws DecompositionError
/// when the vector is not strongly regular.
Decomposition decompose_at(const ClassicalAlgebra& algebra, const RationalVector& torus_coords);
Decomposition decompose(const ClassicalAlgebra& algebra);

std::size_t root_count(const Decomposition& dec);

struct BracketTarget {
  struct Match {
    std::size_t index;
    int sign;  // a_i +/- a_j = sign * a_index
  };
  std::optional<Match> plus, minus;
};
BracketTarget bracket_target(const Decomposition& dec, std::size_t i, std::size_t j);

/// The rotation E -> F, F -> -E of root space i, applied to a component in it.
Matrix quarter_turn(const Decomposition& dec, std::size_t i, const Matrix& v);

/// Component of v in root space i, by orthogonal projection.
Matrix project(const Decomposition& dec, std::size_t i, const Matrix& v);

/// Brackets {[V,W], [V,RW], [RV,W], [RV,RW]} for V = E_i, W = E_j, checked
/// against the pattern fixed by [V,W] = A+ + A-:
///   [V,RW] = R+A+ - R-A-,  [RV,W] = R+A+ + R-A-,  [RV,RW] = -A+ + A-.
/// Throws InvariantError on mismatch.
struct BracketTable {
  std::array<std::array<Matrix, 2>, 2> cells;
  Matrix plus_part, minus_part;
};
BracketTable general_bracket_table(const Decomposition& dec, std::size_t i, std::size_t j);

/// sum_i a_i(X) R_i(V^i); X must lie in the torus.
Matrix ad_action(const Decomposition& dec, const Matrix& X, const Matrix& V);

}  // namespace rootspace
