#include "rootspace/verify.hpp"

#include <functional>
#include <random>
#include <tuple>

#include "rootspace/complexification.hpp"
#include "rootspace/decomposition.hpp"
#include "rootspace/errors.hpp"
#include "rootspace/root_system.hpp"

namespace rootspace {

namespace {

constexpr std::size_t kExhaustiveDim = 30;
constexpr std::size_t kSampledTriples = 2000;

std::size_t expected_dim(const ClassicalAlgebra& a) {
  const std::size_t n = static_cast<std::size_t>(a.n());
  switch (a.family()) {
    case Family::SU: return n * n - 1;
    case Family::SO_even: return n * (2 * n - 1);
    case Family::SO_odd: return n * (2 * n + 1);
    case Family::Sp: return n * (2 * n + 1);
  }
  return 0;
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> triples(std::size_t dim, bool ordered) {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
  if (dim <= kExhaustiveDim) {
    for (std::size_t x = 0; x < dim; ++x)
      for (std::size_t y = ordered ? 0 : x + 1; y < dim; ++y)
        for (std::size_t z = ordered ? 0 : y + 1; z < dim; ++z) out.emplace_back(x, y, z);
    return out;
  }
  std::mt19937_64 rng(0x5eedULL);
  for (std::size_t k = 0; k < kSampledTriples; ++k) out.emplace_back(rng() % dim, rng() % dim, rng() % dim);
  return out;
}

CheckResult run(const std::string& name, const std::function<std::string()>& body) {
  try {
    return {name, true, body()};
  } catch (const std::exception& e) {
    return {name, false, e.what()};
  }
}

}  // namespace

std::vector<CheckResult> verify_algebra(const ClassicalAlgebra& a) {
  std::vector<CheckResult> out;
  const std::size_t dim = a.dim();
  auto B = [&](std::size_t k) -> const Matrix& { return a.basis_element(k).matrix; };

  out.push_back(run("basis", [&] {
    if (dim != expected_dim(a)) throw InvariantError("dimension " + std::to_string(dim) + " differs from the formula");
    for (std::size_t k = 0; k < dim; ++k) {
      const Matrix& g = B(k);
      if (!(g + g.adjoint()).is_zero()) throw InvariantError(a.basis_element(k).name + " is not skew-adjoint");
      if (a.family() == Family::SU) {
        Quaternion trace;
        for (std::size_t d = 0; d < g.dim(); ++d) trace += g(d, d);
        if (!trace.is_zero()) throw InvariantError(a.basis_element(k).name + " has nonzero trace");
      }
    }
    for (std::size_t x = 0; x < a.rank(); ++x)
      for (std::size_t y = 0; y < a.rank(); ++y)
        if (!bracket(B(x), B(y)).is_zero()) throw InvariantError("torus basis does not commute");
    return std::to_string(dim) + " generators, rank " + std::to_string(a.rank());
  }));

  out.push_back(run("jacobi", [&] {
    const auto ts = triples(dim, false);
    for (const auto& [x, y, z] : ts) {
      const Matrix j = bracket(B(x), bracket(B(y), B(z))) + bracket(B(y), bracket(B(z), B(x))) +
                       bracket(B(z), bracket(B(x), B(y)));
      if (!j.is_zero())
        throw InvariantError("fails on " + a.basis_element(x).name + ", " + a.basis_element(y).name + ", " +
                             a.basis_element(z).name);
    }
    return std::to_string(ts.size()) + (dim <= kExhaustiveDim ? " triples (all, up to order)" : " sampled triples");
  }));

  out.push_back(run("ad-invariance", [&] {
    const auto ts = triples(dim, true);
    for (const auto& [x, y, z] : ts)
      if (inner_product(bracket(B(x), B(y)), B(z)) != -inner_product(B(y), bracket(B(x), B(z))))
        throw InvariantError("fails on " + a.basis_element(x).name + ", " + a.basis_element(y).name + ", " +
                             a.basis_element(z).name);
    return std::to_string(ts.size()) + (dim <= kExhaustiveDim ? " ordered triples" : " sampled triples");
  }));

  std::optional<Decomposition> dec;
  out.push_back(run("decomposition", [&] {
    dec.emplace(decompose(a));
    const Matrix& X = dec->regular_X();
    if (2 * dec->size() != dec->s()) throw InvariantError("2m differs from dim - rank");
    for (std::size_t i = 0; i < dec->size(); ++i) {
      const RootDatum& d = dec->root_data()[i];
      const Rational v = dec->root_value(i, X);
      for (const Matrix* w : {&d.E, &d.F})
        if (!(bracket(X, bracket(X, *w)) == -(v * v) * *w)) throw InvariantError("ad_X^2 is not -a(X)^2 on " + d.label);
      for (std::size_t k = 0; k < i; ++k)
        if (rank(std::vector<RationalVector>{d.dual_coords, dec->root_data()[k].dual_coords}) < 2)
          throw InvariantError("dual roots " + d.label + " and " + dec->root_data()[k].label + " are parallel");
    }
    return std::to_string(dec->size()) + " root spaces, " + std::to_string(root_count(*dec)) + " roots";
  }));
  if (!dec) return out;

  out.push_back(run("ad-action", [&] {
    for (std::size_t t = 0; t < a.rank(); ++t)
      for (const Matrix* X : {&dec->regular_X(), &B(t)})
        for (std::size_t k = 0; k < dim; ++k)
          if (!(ad_action(*dec, *X, B(k)) == bracket(*X, B(k))))
            throw InvariantError("root rotation differs from the bracket on " + a.basis_element(k).name);
    return std::string("matches the bracket on every basis element");
  }));

  out.push_back(run("root-system axioms", [&] {
    const RootSystem rs = from_decomposition(*dec);
    const AxiomReport r = verify_axioms(rs);
    if (!r) throw InvariantError("property " + std::to_string(r.property) + ": " + r.violation);
    find_base(rs);
    return std::to_string(rs.roots.size()) + " roots";
  }));

  out.push_back(run("root sums", [&] {
    const auto spaces = complex_root_spaces(*dec);
    std::size_t nonzero = 0, both = 0;
    for (std::size_t i = 0; i < dec->size(); ++i)
      for (std::size_t j = 0; j < dec->size(); ++j) {
        if (i == j) continue;
        const BracketTarget t = bracket_target(*dec, i, j);
        general_bracket_table(*dec, i, j);
        rootsums_via_complexification(*dec, spaces, i, j);
        nonzero += t.plus || t.minus;
        if (t.plus && t.minus) {
          ++both;
          // Only su and even so keep sums and differences apart; sp pairs
          // alpha_ij, beta_ij hit gamma_i and gamma_j just as so(2n+1) does.
          if (a.family() == Family::SU || a.family() == Family::SO_even)
            throw InvariantError("both sum and difference of " + dec->root_data()[i].label + ", " +
                                 dec->root_data()[j].label + " are dual roots");
        }
      }
    return std::to_string(nonzero) + " ordered pairs with nonzero bracket, " + std::to_string(both) +
           " with both targets; complexified route agrees";
  }));

  out.push_back(run("complexification", [&] {
    const auto spaces = complex_root_spaces(*dec);
    if (a.rank() + spaces.size() != dim) throw InvariantError("complex dimensions do not add up");
    return std::to_string(spaces.size()) + " complex root lines, eigen relation holds";
  }));
  return out;
}

}  // namespace rootspace
