#pragma once

#include <string>
#include <vector>

#include "rootspace/classical.hpp"

namespace rootspace {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Runs the invariant checks end to end: basis membership, Jacobi and
/// Ad-invariance (every basis triple up to dimension 30, else a fixed sample
/// of 2000), the root-space decomposition, root-system axioms, root sums by
/// both routes, and the complexified eigen relation.
std::vector<CheckResult> verify_algebra(const ClassicalAlgebra& a);

}  // namespace rootspace
