#include "rootspace/root_system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "rootspace/decomposition.hpp"
#include "rootspace/errors.hpp"

namespace rootspace {

namespace {

std::optional<Rational> parallel_factor(const RationalVector& alpha, const RationalVector& beta) {
  std::size_t k = 0;
  while (k < alpha.size() && sgn(alpha[k]) == 0) ++k;
  if (k == alpha.size()) return std::nullopt;
  const Rational t = beta[k] / alpha[k];
  if (t * alpha == beta) return t;
  return std::nullopt;
}

bool positive_definite(RationalMatrix g) {
  const std::size_t n = g.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(g(k, k)) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(g(i, k)) == 0) continue;
      const Rational f = g(i, k) / g(k, k);
      for (std::size_t j = k; j < n; ++j) g(i, j) -= f * g(k, j);
    }
  }
  return true;
}

std::string negated_label(const std::string& label) {
  if (!label.empty() && label.front() == '-') return label.substr(1);
  return "-" + label;
}

}  // namespace

std::optional<std::size_t> RootSystem::index_of(const RationalVector& v) const {
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (roots[k] == v) return k;
  return std::nullopt;
}

std::string RootSystem::label(std::size_t index) const {
  if (labels.size() == roots.size()) return labels.at(index);
  return to_string(roots.at(index));
}

RootSystem make_root_system(std::size_t rank, RationalMatrix gram, std::vector<RationalVector> roots) {
  if (rank == 0) throw StructuralError("root system rank must be positive");
  if (gram.rows() != rank || gram.cols() != rank) throw StructuralError("gram matrix must be rank x rank");
  if (!(gram == gram.transpose())) throw StructuralError("gram matrix is not symmetric");
  if (!positive_definite(gram)) throw StructuralError("gram matrix is not positive definite");
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (roots[k].size() != rank) throw StructuralError("root " + std::to_string(k) + " has the wrong length");
    if (is_zero(roots[k])) throw StructuralError("root " + std::to_string(k) + " is zero");
  }
  RootSystem rs;
  rs.rank = rank;
  rs.gram = std::move(gram);
  rs.roots = std::move(roots);
  return rs;
}

RootSystem from_decomposition(const Decomposition& dec) {
  const auto& a = dec.algebra();
  std::vector<RationalVector> roots;
  std::vector<std::string> labels;
  for (const auto& d : dec.root_data()) {
    roots.push_back(d.dual_coords);
    labels.push_back(d.label);
  }
  for (const auto& d : dec.root_data()) {
    roots.push_back(-d.dual_coords);
    labels.push_back(negated_label(d.label));
  }
  RootSystem rs = make_root_system(a.rank(), a.torus_gram(), std::move(roots));
  if (rank(rs.roots) != rs.rank) throw StructuralError("dual roots of " + a.name() + " do not span the torus");
  rs.labels = std::move(labels);
  rs.preferred_functional = dec.regular_coords();
  return rs;
}

AxiomReport verify_axioms(const RootSystem& rs) {
  AxiomReport r;
  auto fail = [&](int property, std::string why) {
    r.ok = false;
    r.property = property;
    r.violation = std::move(why);
    return r;
  };
  if (rs.roots.empty() || rank(rs.roots) != rs.rank) return fail(0, "roots do not span the space");
  std::map<RationalVector, std::size_t> where;
  for (std::size_t k = 0; k < rs.roots.size(); ++k)
    if (!where.emplace(rs.roots[k], k).second) return fail(1, "root " + rs.label(k) + " is listed twice");

  for (std::size_t a = 0; a < rs.roots.size(); ++a) {
    const auto& alpha = rs.roots[a];
    if (!where.count(-alpha)) return fail(1, "negative of " + rs.label(a) + " is missing");
    for (std::size_t b = 0; b < rs.roots.size(); ++b) {
      if (a == b) continue;
      if (auto t = parallel_factor(alpha, rs.roots[b]); t && *t != -1)
        return fail(1, rs.label(b) + " is a multiple " + to_string(*t) + " of " + rs.label(a));
    }
  }
  for (std::size_t a = 0; a < rs.roots.size(); ++a)
    for (std::size_t b = 0; b < rs.roots.size(); ++b)
      if (!where.count(reflect(rs, rs.roots[a], rs.roots[b])))
        return fail(2, "reflecting " + rs.label(b) + " in " + rs.label(a) + " leaves the root set");
  for (std::size_t a = 0; a < rs.roots.size(); ++a) {
    const Rational aa = rs.pair(rs.roots[a], rs.roots[a]);
    for (std::size_t b = 0; b < rs.roots.size(); ++b)
      if (!is_integer(2 * rs.pair(rs.roots[b], rs.roots[a]) / aa))
        return fail(3, "2<" + rs.label(b) + "," + rs.label(a) + ">/<" + rs.label(a) + "," + rs.label(a) +
                           "> is not an integer");
  }
  return r;
}

RationalVector reflect(const RootSystem& rs, const RationalVector& alpha, const RationalVector& x) {
  if (is_zero(alpha)) throw StructuralError("reflection in the zero vector");
  const Rational t = 2 * rs.pair(alpha, x) / rs.pair(alpha, alpha);
  return x - t * alpha;
}

RationalMatrix reflection_matrix(const RootSystem& rs, const RationalVector& alpha) {
  if (is_zero(alpha)) throw StructuralError("reflection in the zero vector");
  const RationalVector g = rs.gram * alpha;
  const Rational scale = 2 / rs.pair(alpha, alpha);
  RationalMatrix m = RationalMatrix::identity(rs.rank);
  for (std::size_t i = 0; i < rs.rank; ++i)
    for (std::size_t j = 0; j < rs.rank; ++j)
      if (sgn(alpha[i]) != 0 && sgn(g[j]) != 0) m(i, j) -= scale * alpha[i] * g[j];
  return m;
}

WeylElement make_weyl_element(const RootSystem& rs, const RationalMatrix& m) {
  WeylElement w{m, {}};
  w.permutation.reserve(rs.roots.size());
  for (const auto& root : rs.roots) {
    auto k = rs.index_of(m * root);
    if (!k) throw InvariantError("matrix does not permute the roots");
    w.permutation.push_back(*k);
  }
  return w;
}

std::vector<WeylElement> weyl_group(const RootSystem& rs, std::optional<std::size_t> cap) {
  const std::size_t n = rs.roots.size();
  std::size_t limit = cap.value_or(0);
  if (!cap) {
    // (number of roots)! saturating; the group permutes the roots faithfully.
    limit = 1;
    for (std::size_t k = 2; k <= n && limit < (std::size_t(1) << 40); ++k) limit *= k;
  }

  std::vector<WeylElement> gens;
  for (std::size_t a = 0; a < n; ++a) {
    auto neg = rs.index_of(-rs.roots[a]);
    if (neg && *neg < a) continue;
    gens.push_back(make_weyl_element(rs, reflection_matrix(rs, rs.roots[a])));
  }

  std::vector<WeylElement> elems;
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> id(n);
  for (std::size_t k = 0; k < n; ++k) id[k] = k;
  elems.push_back({RationalMatrix::identity(rs.rank), id});
  seen.insert(id);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      std::vector<std::size_t> perm(n);
      for (std::size_t k = 0; k < n; ++k) perm[k] = g.permutation[elems[head].permutation[k]];
      if (!seen.insert(perm).second) continue;
      if (elems.size() >= limit) throw CapExceeded("Weyl group larger than the cap", limit);
      elems.push_back({g.matrix * elems[head].matrix, std::move(perm)});
    }
  }
  std::sort(elems.begin(), elems.end(),
            [](const WeylElement& x, const WeylElement& y) { return x.permutation < y.permutation; });
  return elems;
}

std::string to_string(AngleCase c) {
  switch (c) {
    case AngleCase::orthogonal: return "orthogonal";
    case AngleCase::type1: return "type1";
    case AngleCase::type2: return "type2";
    case AngleCase::type3: return "type3";
    case AngleCase::parallel: return "parallel";
  }
  return "?";
}

AngleCase classify_angle(const RootSystem& rs, const RationalVector& alpha, const RationalVector& beta) {
  if (is_zero(alpha) || is_zero(beta)) throw StructuralError("classify_angle: zero vector");
  if (alpha == beta || alpha == -beta) return AngleCase::parallel;
  const Rational ab = rs.pair(alpha, beta);
  const Rational p = 2 * ab / rs.pair(alpha, alpha);
  const Rational q = 2 * ab / rs.pair(beta, beta);
  const Rational pq = p * q;
  if (!is_integer(p) || !is_integer(q) || pq < 0 || pq > 3)
    throw StructuralError("not a root system: angle invariants p = " + to_string(p) + ", q = " + to_string(q));
  switch (pq.get_num().get_si()) {
    case 0: return AngleCase::orthogonal;
    case 1: return AngleCase::type1;
    case 2: return AngleCase::type2;
    default: return AngleCase::type3;
  }
}

Base base_from_simple(const RootSystem& rs, std::vector<std::size_t> simple) {
  auto bad = [](const std::string& why) { return InvariantError("base property violated: " + why); };
  std::sort(simple.begin(), simple.end());
  if (simple.size() != rs.rank) throw bad("expected " + std::to_string(rs.rank) + " simple roots");
  std::vector<RationalVector> cols;
  for (auto s : simple) cols.push_back(rs.roots.at(s));
  auto inv = inverse(RationalMatrix::from_columns(cols, rs.rank));
  if (!inv) throw bad("simple roots are dependent");

  Base b;
  b.simple = std::move(simple);
  for (std::size_t k = 0; k < rs.roots.size(); ++k) {
    const RationalVector c = *inv * rs.roots[k];
    bool pos = false, neg = false;
    std::vector<std::int64_t> e;
    for (const auto& x : c) {
      if (!is_integer(x) || !x.get_num().fits_slong_p()) throw bad(rs.label(k) + " has a non-integral expansion");
      pos |= sgn(x) > 0;
      neg |= sgn(x) < 0;
      e.push_back(x.get_num().get_si());
    }
    if (pos && neg) throw bad(rs.label(k) + " has coefficients of both signs");
    b.expansion.push_back(std::move(e));
    b.sign.push_back(pos ? 1 : -1);
  }
  return b;
}

Base find_base(const RootSystem& rs, std::optional<RationalVector> functional) {
  RationalVector v0 = functional ? *functional : rs.preferred_functional.value_or(RationalVector(rs.rank));
  if (v0.size() != rs.rank) throw StructuralError("find_base: functional has the wrong length");
  auto generic = [&](const RationalVector& v) {
    return std::none_of(rs.roots.begin(), rs.roots.end(), [&](const auto& a) { return sgn(rs.pair(v, a)) == 0; });
  };

  RationalVector v = v0;
  if (!generic(v)) {
    // Add eps^k times the gram-dual of coordinate k, so that roots are ordered
    // lexicographically by their coordinates where v0 does not decide. Shrink
    // eps until no root is orthogonal.
    const RationalMatrix dual = inverse(rs.gram).value();
    Integer big = 1;
    for (const auto& a : rs.roots)
      for (const auto& x : rs.gram * a) big = std::max<Integer>(big, abs(x.get_num()) * x.get_den());
    Integer N = big + 1;
    for (int attempt = 0;; ++attempt) {
      if (attempt > 64) throw InvariantError("find_base: no generic functional found");
      v = v0;
      Rational eps(1), step(Integer(1), N);
      for (std::size_t k = 0; k < rs.rank; ++k) {
        eps *= step;
        for (std::size_t r = 0; r < rs.rank; ++r) v[r] += eps * dual(r, k);
      }
      if (generic(v)) break;
      N *= 2;
    }
  }

  std::vector<std::size_t> positive;
  for (std::size_t k = 0; k < rs.roots.size(); ++k)
    if (sgn(rs.pair(v, rs.roots[k])) > 0) positive.push_back(k);
  std::vector<bool> decomposable(rs.roots.size(), false);
  for (std::size_t x = 0; x < positive.size(); ++x)
    for (std::size_t y = x + 1; y < positive.size(); ++y)
      if (auto s = rs.index_of(rs.roots[positive[x]] + rs.roots[positive[y]])) decomposable[*s] = true;
  std::vector<std::size_t> simple;
  for (auto p : positive)
    if (!decomposable[p]) simple.push_back(p);

  Base b = base_from_simple(rs, simple);
  for (std::size_t k = 0; k < rs.roots.size(); ++k)
    if (b.sign[k] != sgn(rs.pair(v, rs.roots[k]))) throw InvariantError("base property violated: sign mismatch");
  b.functional = v;
  return b;
}

Base translate(const RootSystem& rs, const Base& base, const WeylElement& w) {
  std::vector<std::size_t> simple;
  for (auto s : base.simple) simple.push_back(w.permutation.at(s));
  Base out = base_from_simple(rs, simple);
  if (!base.functional.empty()) out.functional = w.matrix * base.functional;
  return out;
}

WeylElement chamber_map(const RootSystem& rs, const Base& base, const RationalVector& v) {
  RationalMatrix m = RationalMatrix::identity(rs.rank);
  RationalVector x = v;
  for (std::size_t steps = 0;; ++steps) {
    if (steps > 100000) throw InvariantError("chamber_map did not terminate");
    auto it = std::find_if(base.simple.begin(), base.simple.end(),
                           [&](std::size_t s) { return sgn(rs.pair(x, rs.roots[s])) < 0; });
    if (it == base.simple.end()) break;
    const RationalMatrix s = reflection_matrix(rs, rs.roots[*it]);
    x = s * x;
    m = s * m;
  }
  return make_weyl_element(rs, m);
}

std::vector<std::pair<std::string, RootSystem>> rank2_catalog() {
  auto model = [](long g00, long g01, long g11, std::vector<std::pair<long, long>> positive) {
    RationalMatrix g(2, 2);
    g(0, 0) = g00;
    g(0, 1) = g(1, 0) = g01;
    g(1, 1) = g11;
    std::vector<RationalVector> roots;
    for (auto [a, b] : positive) roots.push_back({Rational(a), Rational(b)});
    for (auto [a, b] : positive) roots.push_back({Rational(-a), Rational(-b)});
    return make_root_system(2, g, roots);
  };
  std::vector<std::pair<std::string, RootSystem>> out;
  out.emplace_back("A1xA1", model(1, 0, 1, {{1, 0}, {0, 1}}));
  out.emplace_back("A2", model(2, -1, 2, {{1, 0}, {0, 1}, {1, 1}}));
  // B2: first simple root long; C2: first simple root short.
  out.emplace_back("B2", model(2, -1, 1, {{1, 0}, {0, 1}, {1, 1}, {1, 2}}));
  out.emplace_back("C2", model(1, -1, 2, {{1, 0}, {0, 1}, {1, 1}, {2, 1}}));
  out.emplace_back("G2", model(2, -3, 6, {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}}));
  return out;
}

}  // namespace rootspace
