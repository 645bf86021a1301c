#include "rootspace/decomposition.hpp"

#include <algorithm>
#include <random>

#include "rootspace/errors.hpp"

namespace rootspace {

namespace {

constexpr std::size_t kCandidateCount = 40;

std::string greek_for(const std::string& element_name) {
  const char letter = element_name.empty() ? '?' : element_name[0];
  const std::string suffix = element_name.size() > 2 ? element_name.substr(2) : "";
  switch (letter) {
    case 'E': return "alpha_" + suffix;
    case 'X':
    case 'A': return "beta_" + suffix;
    case 'V':
    case 'J': return "gamma_" + suffix;
    default: return "root_" + suffix;
  }
}

Matrix offtorus_combination(const ClassicalAlgebra& a, const RationalVector& coords) {
  Matrix out(a.matrix_dim(), a.scalars());
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (sgn(coords[k]) != 0) out += coords[k] * a.offtorus_basis()[k].matrix;
  return out;
}

// Name the root space after the basis pair spanning it, signed so the
// label's dual root is the pair's own bracket [B, B'] / |B|^2.
std::string label_for(const ClassicalAlgebra& a, const RootDatum& d, const RationalVector& e_coords,
                      const RationalVector& f_coords) {
  const std::size_t p = d.leading / 2;
  for (std::size_t k = 0; k < e_coords.size(); ++k)
    if (k / 2 != p && (sgn(e_coords[k]) != 0 || sgn(f_coords[k]) != 0)) return "root_" + std::to_string(d.leading);
  const auto& first = a.offtorus_basis()[2 * p];
  const auto& second = a.offtorus_basis()[2 * p + 1];
  const Matrix canonical = Rational(1) / inner_product(first.matrix, first.matrix) * bracket(first.matrix, second.matrix);
  const RationalVector c = a.torus_coordinates(canonical);
  const std::string name = greek_for(first.name);
  if (c == d.dual_coords) return name;
  if (-c == d.dual_coords) return "-" + name;
  return "root_" + std::to_string(d.leading);
}

}  // namespace

Decomposition::Decomposition(std::shared_ptr<const ClassicalAlgebra> algebra, RationalVector regular_coords,
                             Matrix regular_X, std::vector<RootDatum> data)
    : algebra_(std::move(algebra)),
      regular_coords_(std::move(regular_coords)),
      regular_X_(std::move(regular_X)),
      data_(std::move(data)) {}

Rational Decomposition::root_value(std::size_t i, const Matrix& X) const {
  return inner_product(data_.at(i).dual_root, X);
}

std::optional<std::pair<std::size_t, int>> Decomposition::find_dual(const RationalVector& coords) const {
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (data_[k].dual_coords == coords) return std::pair<std::size_t, int>{k, 1};
    if (data_[k].dual_coords == -coords) return std::pair<std::size_t, int>{k, -1};
  }
  return std::nullopt;
}

std::vector<RationalVector> regular_candidates(const ClassicalAlgebra& algebra, std::size_t count) {
  const std::size_t d = algebra.family() == Family::SU ? static_cast<std::size_t>(algebra.n()) : algebra.rank();
  std::vector<std::vector<Integer>> weights;
  auto offer = [&](std::vector<Integer> w) {
    if (std::find(weights.begin(), weights.end(), w) == weights.end()) weights.push_back(std::move(w));
  };
  for (long base : {2L, 3L}) {
    std::vector<Integer> w(d);
    Integer p = 1;
    for (std::size_t k = d; k-- > 0;) {
      w[k] = p;
      p *= base;
    }
    offer(std::move(w));
  }
  std::mt19937_64 rng(0x7eedULL);
  const std::uint64_t range = 10 * algebra.rank() * algebra.rank();
  // Small ranks have few distinct draws; stop rather than loop forever.
  for (std::size_t attempt = 0; weights.size() < count && attempt < 64 * count; ++attempt) {
    std::vector<Integer> w;
    while (w.size() < d) {
      Integer x(static_cast<unsigned long>(rng() % range + 1));
      if (std::find(w.begin(), w.end(), x) == w.end()) w.push_back(x);
    }
    std::sort(w.begin(), w.end(), std::greater<>());
    offer(std::move(w));
  }
  if (weights.size() > count) weights.resize(count);

  std::vector<RationalVector> out;
  for (const auto& w : weights) {
    RationalVector params(d);
    if (algebra.family() == Family::SU) {
      Integer total;
      for (const auto& x : w) total += x;
      for (std::size_t k = 0; k < d; ++k) params[k] = Integer(static_cast<long>(d)) * w[k] - total;
    } else {
      for (std::size_t k = 0; k < d; ++k) params[k] = w[k];
    }
    out.push_back(algebra.torus_from_diagonal(params));
  }
  return out;
}

Decomposition decompose_at(const ClassicalAlgebra& algebra, const RationalVector& torus_coords) {
  auto shared = std::make_shared<const ClassicalAlgebra>(algebra);
  const ClassicalAlgebra& a = *shared;
  const Matrix X = a.torus_vector(torus_coords);
  const std::size_t r = a.rank(), s = a.dim() - r;

  // ad_X on the off-torus coordinates.
  RationalMatrix ad(s, s);
  for (std::size_t k = 0; k < s; ++k) {
    const RationalVector c = a.coordinates(bracket(X, a.offtorus_basis()[k].matrix));
    for (std::size_t t = 0; t < r; ++t)
      if (sgn(c[t]) != 0) throw InvariantError("ad_X does not preserve the torus complement");
    for (std::size_t q = 0; q < s; ++q) ad(q, k) = c[r + q];
  }
  const RationalMatrix sq = ad * ad;

  std::vector<Integer> eigen;
  try {
    eigen = integer_eigenvalues(sq, gershgorin_bound(sq));
  } catch (const SpectrumError& e) {
    throw DecompositionError(std::string("not strongly regular: ") + e.what());
  }

  std::vector<RootDatum> data;
  for (const auto& mu : eigen) {
    if (sgn(mu) >= 0) throw DecompositionError("not strongly regular: ad_X^2 has eigenvalue " + mu.get_str());
    const Integer neg = -mu;
    if (!mpz_perfect_square_p(neg.get_mpz_t()))
      throw DecompositionError("eigenvalue " + mu.get_str() + " is not minus a square");
    Integer c;
    mpz_sqrt(c.get_mpz_t(), neg.get_mpz_t());

    RationalMatrix shifted = sq;
    for (std::size_t d = 0; d < s; ++d) shifted(d, d) -= mu;
    const auto kernel = kernel_basis(shifted);
    if (kernel.size() != 2)
      throw DecompositionError("not strongly regular: eigenvalue " + mu.get_str() + " has multiplicity " +
                               std::to_string(kernel.size()));

    RootDatum d;
    const RationalVector& e = kernel.front();
    const RationalVector f = Rational(1, 1) / Rational(c) * (ad * e);
    d.E = offtorus_combination(a, e);
    d.F = offtorus_combination(a, f);
    d.norm_sq = inner_product(d.E, d.E);
    if (inner_product(d.F, d.F) != d.norm_sq || sgn(inner_product(d.E, d.F)) != 0)
      throw InvariantError("root space basis is not orthogonal with equal norms");
    d.dual_root = Rational(1) / d.norm_sq * bracket(d.E, d.F);
    try {
      d.dual_coords = a.torus_coordinates(d.dual_root);
    } catch (const StructuralError&) {
      throw InvariantError("dual root outside the torus");
    }
    d.root_coords = a.torus_gram() * d.dual_coords;
    if (inner_product(d.dual_root, X) != Rational(c)) throw InvariantError("root value at X differs from sqrt(-eigenvalue)");
    for (std::size_t b = 0; b < r; ++b) {
      const Matrix& H = a.torus_basis()[b].matrix;
      const Rational& v = d.root_coords[b];
      if (!(bracket(H, d.E) == v * d.F) || !(bracket(H, d.F) == -(v * d.E)))
        throw InvariantError("torus does not rotate root space " + std::to_string(data.size()));
    }
    d.leading = static_cast<std::size_t>(std::find_if(e.begin(), e.end(), [](const Rational& x) { return sgn(x) != 0; }) -
                                         e.begin());
    d.label = label_for(a, d, e, f);
    data.push_back(std::move(d));
  }
  if (2 * data.size() != s) throw InvariantError("root spaces do not fill the torus complement");
  std::sort(data.begin(), data.end(), [](const RootDatum& x, const RootDatum& y) { return x.leading < y.leading; });
  return Decomposition(shared, torus_coords, X, std::move(data));
}

Matrix strongly_regular_vector(const ClassicalAlgebra& algebra) {
  return decompose(algebra).regular_X();
}

Decomposition decompose(const ClassicalAlgebra& algebra) {
  std::string last;
  for (const auto& candidate : regular_candidates(algebra, kCandidateCount)) {
    try {
      return decompose_at(algebra, candidate);
    } catch (const DecompositionError& e) {
      last = e.what();
    }
  }
  throw DecompositionError("no strongly regular vector found for " + algebra.name() + " (last: " + last + ")");
}

std::size_t root_count(const Decomposition& dec) { return 2 * dec.size(); }

BracketTarget bracket_target(const Decomposition& dec, std::size_t i, std::size_t j) {
  if (i == j || i >= dec.size() || j >= dec.size()) throw StructuralError("bracket_target: need two distinct root spaces");
  const auto& a = dec.root_data()[i].dual_coords;
  const auto& b = dec.root_data()[j].dual_coords;
  BracketTarget t;
  if (auto m = dec.find_dual(a + b)) t.plus = BracketTarget::Match{m->first, m->second};
  if (auto m = dec.find_dual(a - b)) t.minus = BracketTarget::Match{m->first, m->second};
  return t;
}

Matrix project(const Decomposition& dec, std::size_t i, const Matrix& v) {
  const RootDatum& d = dec.root_data().at(i);
  return inner_product(v, d.E) / d.norm_sq * d.E + inner_product(v, d.F) / d.norm_sq * d.F;
}

Matrix quarter_turn(const Decomposition& dec, std::size_t i, const Matrix& v) {
  const RootDatum& d = dec.root_data().at(i);
  return inner_product(v, d.E) / d.norm_sq * d.F - inner_product(v, d.F) / d.norm_sq * d.E;
}

BracketTable general_bracket_table(const Decomposition& dec, std::size_t i, std::size_t j) {
  const BracketTarget target = bracket_target(dec, i, j);
  const RootDatum& di = dec.root_data()[i];
  const RootDatum& dj = dec.root_data()[j];
  const Matrix zero(dec.algebra().matrix_dim(), dec.algebra().scalars());

  BracketTable t;
  t.cells[0][0] = bracket(di.E, dj.E);
  t.cells[0][1] = bracket(di.E, dj.F);
  t.cells[1][0] = bracket(di.F, dj.E);
  t.cells[1][1] = bracket(di.F, dj.F);

  t.plus_part = target.plus ? project(dec, target.plus->index, t.cells[0][0]) : zero;
  t.minus_part = target.minus ? project(dec, target.minus->index, t.cells[0][0]) : zero;
  if (!(t.cells[0][0] == t.plus_part + t.minus_part))
    throw InvariantError("bracket of root spaces " + di.label + ", " + dj.label + " leaves the sum/difference spaces");

  const Matrix rp = target.plus ? Rational(target.plus->sign) * quarter_turn(dec, target.plus->index, t.plus_part) : zero;
  const Matrix rm =
      target.minus ? Rational(target.minus->sign) * quarter_turn(dec, target.minus->index, t.minus_part) : zero;
  if (!(t.cells[0][1] == rp - rm) || !(t.cells[1][0] == rp + rm) || !(t.cells[1][1] == t.minus_part - t.plus_part))
    throw InvariantError("bracket table of " + di.label + ", " + dj.label + " breaks the rotation pattern");
  return t;
}

Matrix ad_action(const Decomposition& dec, const Matrix& X, const Matrix& V) {
  const ClassicalAlgebra& a = dec.algebra();
  try {
    a.torus_coordinates(X);
  } catch (const StructuralError&) {
    throw StructuralError("ad_action: X is not in the torus");
  }
  Matrix out(a.matrix_dim(), a.scalars());
  for (std::size_t i = 0; i < dec.size(); ++i) {
    const Rational v = dec.root_value(i, X);
    if (sgn(v) == 0) continue;
    out += v * quarter_turn(dec, i, V);
  }
  return out;
}

}  // namespace rootspace
