#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rootspace/classical.hpp"
#include "rootspace/root_system.hpp"

namespace rootspace {

/// Linear combination "2F_12 - (1/2)E_13"; "0" when empty.
std::string render_terms(const std::vector<std::pair<Rational, std::string>>& terms);

/// Torus element from its torus coordinates. For su(n), a multiple of a
/// single H_ij is written that way ("2H_13").
std::string render_torus(const ClassicalAlgebra& a, const RationalVector& torus_coords);

/// Any algebra element in the canonical basis.
std::string render_element(const ClassicalAlgebra& a, const Matrix& m);

/// "beta_35 = alpha_34 + alpha_45 + 2alpha_56 + ..." for a root of the base.
std::string render_expansion(const RootSystem& rs, const Base& base, std::size_t root);

}  // namespace rootspace
