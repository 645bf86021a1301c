#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootspace/linalg.hpp"

namespace rootspace {

class Decomposition;

/// Abstract root system: coordinates of roots in some basis of a real
/// vector space, with the inner product given by a Gram matrix.
struct RootSystem {
  std::size_t rank = 0;
  RationalMatrix gram;
  std::vector<RationalVector> roots;
  /// Functional used first when choosing positive roots (torus coordinates).
  std::optional<RationalVector> preferred_functional;
  /// Optional display names, parallel to roots.
  std::vector<std::string> labels;

  Rational pair(const RationalVector& a, const RationalVector& b) const { return pairing(a, gram, b); }
  std::optional<std::size_t> index_of(const RationalVector& v) const;
  std::string label(std::size_t index) const;
};

/// Shape checks only (square symmetric gram, root lengths, nonzero roots).
RootSystem make_root_system(std::size_t rank, RationalMatrix gram, std::vector<RationalVector> roots);

/// Dual roots of a decomposition, positive orientation first then negatives.
RootSystem from_decomposition(const Decomposition& dec);

struct AxiomReport {
  bool ok = true;
  int property = 0;  // 1: only +/- multiples, 2: reflection closure, 3: integrality; 0 otherwise
  std::string violation;
  explicit operator bool() const { return ok; }
};
AxiomReport verify_axioms(const RootSystem& rs);

RationalVector reflect(const RootSystem& rs, const RationalVector& alpha, const RationalVector& x);
RationalMatrix reflection_matrix(const RootSystem& rs, const RationalVector& alpha);

struct WeylElement {
  RationalMatrix matrix;
  std::vector<std::size_t> permutation;  // matrix * roots[k] == roots[permutation[k]]
};

/// Wraps a matrix, computing the root permutation. Throws if it does not permute the roots.
WeylElement make_weyl_element(const RootSystem& rs, const RationalMatrix& m);

/// Whole group generated by the root reflections, sorted by permutation.
/// Throws CapExceeded once more than `cap` elements have been found.
std::vector<WeylElement> weyl_group(const RootSystem& rs, std::optional<std::size_t> cap = std::nullopt);

enum class AngleCase { orthogonal, type1, type2, type3, parallel };
std::string to_string(AngleCase c);
/// Decided from p = 2<b,a>/<a,a> and q = 2<a,b>/<b,b>; throws StructuralError
/// when pq is not in {0,1,2,3} and the roots are not +/- each other.
AngleCase classify_angle(const RootSystem& rs, const RationalVector& alpha, const RationalVector& beta);

struct Base {
  std::vector<std::size_t> simple;                  // root indices, ascending
  std::vector<std::vector<std::int64_t>> expansion;  // per root, over `simple`
  std::vector<int> sign;                            // per root, +1 or -1
  RationalVector functional;                        // positive roots pair positively with it
};

/// Base of positive roots for a generic functional: `functional` if given,
/// else the system's preferred functional, perturbed until no root is orthogonal.
Base find_base(const RootSystem& rs, std::optional<RationalVector> functional = std::nullopt);

/// Checks that the given roots form a base and computes expansions.
/// Throws InvariantError("base property violated") otherwise.
Base base_from_simple(const RootSystem& rs, std::vector<std::size_t> simple);

/// Image of a base under a Weyl element.
Base translate(const RootSystem& rs, const Base& base, const WeylElement& w);

/// Weyl element w, built from simple reflections, with <w v, a> >= 0 for every simple root a.
WeylElement chamber_map(const RootSystem& rs, const Base& base, const RationalVector& v);

/// Root systems are equivalent iff their Dynkin diagrams are isomorphic.
bool equivalent(const RootSystem& a, const RootSystem& b);

/// A1xA1, A2, B2, C2 and G2 in simple-root coordinates.
std::vector<std::pair<std::string, RootSystem>> rank2_catalog();

}  // namespace rootspace
