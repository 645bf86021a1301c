#include "rootspace/classical.hpp"

#include <charconv>

#include "rootspace/errors.hpp"

namespace rootspace {

namespace {

constexpr int kMaxParameter = 32;

Quaternion unit(char which) {
  switch (which) {
    case 'i': return Quaternion::unit_i();
    case 'j': return Quaternion::unit_j();
    case 'k': return Quaternion::unit_k();
    default: return Quaternion(Rational(1));
  }
}

// Places b in block (p, q) and -b^T in block (q, p); for p == q only the
// block itself is written.
void put_block(Matrix& m, std::size_t p, std::size_t q, const int (&b)[2][2]) {
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      if (b[r][c] == 0) continue;
      m.set(2 * p + r, 2 * q + c, Rational(b[r][c]));
      if (p != q) m.set(2 * q + c, 2 * p + r, Rational(-b[r][c]));
    }
}

constexpr int kBlockE[2][2] = {{1, 0}, {0, 1}};
constexpr int kBlockF[2][2] = {{0, 1}, {-1, 0}};
constexpr int kBlockX[2][2] = {{0, 1}, {1, 0}};
constexpr int kBlockY[2][2] = {{1, 0}, {0, -1}};

bool is_pair_letter(Family f, char c) {
  switch (f) {
    case Family::SU: return c == 'H' || c == 'E' || c == 'F';
    case Family::SO_even:
    case Family::SO_odd: return c == 'E' || c == 'F' || c == 'X' || c == 'Y';
    case Family::Sp: return c == 'E' || c == 'F' || c == 'A' || c == 'B';
  }
  return false;
}

bool is_single_letter(Family f, char c) {
  switch (f) {
    case Family::SU: return false;
    case Family::SO_even: return c == 'H';
    case Family::SO_odd: return c == 'H' || c == 'V' || c == 'W';
    case Family::Sp: return c == 'H' || c == 'J' || c == 'K';
  }
  return false;
}

std::optional<int> parse_index(std::string_view s) {
  int v = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::SU: return "su";
    case Family::SO_even:
    case Family::SO_odd: return "so";
    case Family::Sp: return "sp";
  }
  return "?";
}

std::string index_suffix(int i, int j) {
  if (i < 10 && j < 10) return std::to_string(i) + std::to_string(j);
  return std::to_string(i) + "," + std::to_string(j);
}

std::string index_suffix(int i) { return std::to_string(i); }

std::string ClassicalAlgebra::name() const {
  switch (family_) {
    case Family::SU: return "su(" + std::to_string(n_) + ")";
    case Family::SO_even: return "so(" + std::to_string(2 * n_) + ")";
    case Family::SO_odd: return "so(" + std::to_string(2 * n_ + 1) + ")";
    case Family::Sp: return "sp(" + std::to_string(n_) + ")";
  }
  return "?";
}

const NamedElement& ClassicalAlgebra::basis_element(std::size_t index) const {
  if (index >= dim()) throw StructuralError("basis index out of range");
  return index < torus_.size() ? torus_[index] : offtorus_[index - torus_.size()];
}

std::optional<std::size_t> ClassicalAlgebra::index_of(std::string_view name) const {
  for (std::size_t k = 0; k < dim(); ++k)
    if (basis_element(k).name == name) return k;
  return std::nullopt;
}

Matrix ClassicalAlgebra::element(std::string_view name) const {
  auto unknown = [&] { return StructuralError("unknown generator '" + std::string(name) + "' in " + this->name()); };
  if (name.size() < 3 || name[1] != '_') throw unknown();
  const char letter = name[0];
  const std::string_view suffix = name.substr(2);
  const int n = n_;
  Matrix m(matrix_dim_, scalars_);

  if (is_single_letter(family_, letter)) {
    auto idx = parse_index(suffix);
    if (!idx || *idx < 1 || *idx > n) throw unknown();
    const std::size_t i = static_cast<std::size_t>(*idx - 1);
    if (family_ == Family::Sp) {
      m.set(i, i, unit(letter == 'H' ? 'i' : letter == 'J' ? 'j' : 'k'));
    } else if (letter == 'H') {
      put_block(m, i, i, kBlockF);
    } else {
      const std::size_t last = 2 * static_cast<std::size_t>(n);
      const std::size_t row = letter == 'W' ? 2 * i : 2 * i + 1;
      m.set(row, last, Rational(1));
      m.set(last, row, Rational(-1));
    }
    return m;
  }
  if (!is_pair_letter(family_, letter)) throw unknown();

  std::optional<int> a, b;
  if (auto comma = suffix.find(','); comma != std::string_view::npos) {
    a = parse_index(suffix.substr(0, comma));
    b = parse_index(suffix.substr(comma + 1));
  } else if (suffix.size() == 2) {
    a = parse_index(suffix.substr(0, 1));
    b = parse_index(suffix.substr(1, 1));
  }
  if (!a || !b || *a < 1 || *b < 1 || *a > n || *b > n || *a == *b) throw unknown();
  const std::size_t i = static_cast<std::size_t>(*a - 1), j = static_cast<std::size_t>(*b - 1);

  if (family_ == Family::SO_even || family_ == Family::SO_odd) {
    switch (letter) {
      case 'E': put_block(m, i, j, kBlockE); break;
      case 'F': put_block(m, i, j, kBlockF); break;
      case 'X': put_block(m, i, j, kBlockX); break;
      default: put_block(m, i, j, kBlockY); break;
    }
    return m;
  }
  switch (letter) {
    case 'H':
      m.set(i, i, unit('i'));
      m.set(j, j, -unit('i'));
      break;
    case 'E':
      m.set(i, j, Rational(1));
      m.set(j, i, Rational(-1));
      break;
    default: {
      const Quaternion q = unit(letter == 'F' ? 'i' : letter == 'A' ? 'j' : 'k');
      m.set(i, j, q);
      m.set(j, i, q);
    }
  }
  return m;
}

Matrix ClassicalAlgebra::torus_vector(const RationalVector& coefficients) const {
  if (coefficients.size() != rank())
    throw StructuralError("torus_vector: expected " + std::to_string(rank()) + " coefficients, got " +
                          std::to_string(coefficients.size()));
  Matrix out(matrix_dim_, scalars_);
  for (std::size_t k = 0; k < rank(); ++k)
    if (sgn(coefficients[k]) != 0) out += coefficients[k] * torus_[k].matrix;
  return out;
}

Rational ClassicalAlgebra::pairing_with_basis(const Matrix& m, std::size_t index) const {
  if (m.dim() != matrix_dim_) throw StructuralError("pairing: matrix dimension mismatch");
  const Matrix& b = basis_element(index).matrix;
  Rational s;
  for (const auto& [r, c] : support_[index].cells) s += real_pairing(m(r, c), b(r, c));
  return s;
}

std::optional<RationalVector> ClassicalAlgebra::try_coordinates(const Matrix& m) const {
  if (m.dim() != matrix_dim_ || m.family() != scalars_) return std::nullopt;
  RationalVector coords(dim());
  RationalVector torus_pairings(rank());
  for (std::size_t k = 0; k < rank(); ++k) torus_pairings[k] = pairing_with_basis(m, k);
  const RationalVector t = gram_inverse_ * torus_pairings;
  for (std::size_t k = 0; k < rank(); ++k) coords[k] = t[k];
  for (std::size_t k = rank(); k < dim(); ++k) {
    const Rational p = pairing_with_basis(m, k);
    if (sgn(p) != 0) coords[k] = p / support_[k].norm_sq;
  }
  if (!(combination(coords) == m)) return std::nullopt;
  return coords;
}

RationalVector ClassicalAlgebra::coordinates(const Matrix& m) const {
  auto c = try_coordinates(m);
  if (!c) throw StructuralError("matrix is not an element of " + name());
  return *c;
}

RationalVector ClassicalAlgebra::torus_coordinates(const Matrix& m) const {
  const RationalVector c = coordinates(m);
  for (std::size_t k = rank(); k < dim(); ++k)
    if (sgn(c[k]) != 0) throw StructuralError("matrix is not in the torus of " + name());
  return RationalVector(c.begin(), c.begin() + static_cast<long>(rank()));
}

Matrix ClassicalAlgebra::combination(const RationalVector& coordinates) const {
  if (coordinates.size() != dim()) throw StructuralError("combination: coordinate count mismatch");
  Matrix out(matrix_dim_, scalars_);
  for (std::size_t k = 0; k < dim(); ++k)
    if (sgn(coordinates[k]) != 0) out += coordinates[k] * basis_element(k).matrix;
  return out;
}

bool ClassicalAlgebra::contains(const Matrix& m) const { return try_coordinates(m).has_value(); }

RationalVector ClassicalAlgebra::diagonal_parameters(const RationalVector& torus_coords) const {
  if (torus_coords.size() != rank()) throw StructuralError("diagonal_parameters: length mismatch");
  if (family_ != Family::SU) return torus_coords;
  // sum c_k H_{k,k+1} has diagonal entries c_p - c_{p-1}.
  RationalVector lambda(static_cast<std::size_t>(n_));
  for (std::size_t p = 0; p < lambda.size(); ++p) {
    const Rational cur = p < rank() ? torus_coords[p] : Rational(0);
    const Rational prev = p > 0 ? torus_coords[p - 1] : Rational(0);
    lambda[p] = cur - prev;
  }
  return lambda;
}

RationalVector ClassicalAlgebra::torus_from_diagonal(const RationalVector& parameters) const {
  if (family_ != Family::SU) {
    if (parameters.size() != rank()) throw StructuralError("torus_from_diagonal: length mismatch");
    return parameters;
  }
  if (parameters.size() != static_cast<std::size_t>(n_)) throw StructuralError("torus_from_diagonal: length mismatch");
  Rational total;
  for (const auto& x : parameters) total += x;
  if (sgn(total) != 0) throw StructuralError("su diagonal parameters must sum to zero");
  RationalVector c(rank());
  Rational acc;
  for (std::size_t k = 0; k < rank(); ++k) c[k] = acc += parameters[k];
  return c;
}

void ClassicalAlgebra::add(std::vector<NamedElement>& into, std::string name, Matrix m) {
  into.push_back({std::move(name), std::move(m)});
}

ClassicalAlgebra build(Family family, int n) {
  const int min_n = (family == Family::SU || family == Family::SO_even) ? 2 : 1;
  if (n < min_n || n > kMaxParameter)
    throw StructuralError("unsupported parameter n = " + std::to_string(n) + " for family " + to_string(family));

  ClassicalAlgebra a;
  a.family_ = family;
  a.n_ = n;
  switch (family) {
    case Family::SU:
      a.matrix_dim_ = static_cast<std::size_t>(n);
      a.scalars_ = ScalarFamily::complex;
      break;
    case Family::SO_even:
      a.matrix_dim_ = static_cast<std::size_t>(2 * n);
      a.scalars_ = ScalarFamily::real;
      break;
    case Family::SO_odd:
      a.matrix_dim_ = static_cast<std::size_t>(2 * n + 1);
      a.scalars_ = ScalarFamily::real;
      break;
    case Family::Sp:
      a.matrix_dim_ = static_cast<std::size_t>(n);
      a.scalars_ = ScalarFamily::quaternion;
      break;
  }

  auto named = [&](std::vector<NamedElement>& into, const std::string& name) { a.add(into, name, a.element(name)); };

  if (family == Family::SU) {
    for (int k = 1; k < n; ++k) named(a.torus_, "H_" + index_suffix(k, k + 1));
  } else {
    for (int k = 1; k <= n; ++k) named(a.torus_, "H_" + index_suffix(k));
  }

  auto pairs_by_height = [&](char first, char second) {
    for (int h = 1; h < n; ++h)
      for (int i = 1; i + h <= n; ++i) {
        named(a.offtorus_, std::string(1, first) + "_" + index_suffix(i, i + h));
        named(a.offtorus_, std::string(1, second) + "_" + index_suffix(i, i + h));
      }
  };
  auto singles = [&](char first, char second) {
    for (int i = 1; i <= n; ++i) {
      named(a.offtorus_, std::string(1, first) + "_" + index_suffix(i));
      named(a.offtorus_, std::string(1, second) + "_" + index_suffix(i));
    }
  };
  switch (family) {
    case Family::SU: pairs_by_height('E', 'F'); break;
    case Family::SO_even:
      pairs_by_height('E', 'F');
      pairs_by_height('X', 'Y');
      break;
    case Family::SO_odd:
      pairs_by_height('E', 'F');
      pairs_by_height('X', 'Y');
      singles('V', 'W');
      break;
    case Family::Sp:
      pairs_by_height('E', 'F');
      pairs_by_height('A', 'B');
      singles('J', 'K');
      break;
  }

  for (std::size_t k = 0; k < a.dim(); ++k) {
    const Matrix& m = a.basis_element(k).matrix;
    ClassicalAlgebra::Support s;
    for (std::size_t r = 0; r < m.dim(); ++r)
      for (std::size_t c = 0; c < m.dim(); ++c)
        if (!m(r, c).is_zero()) s.cells.emplace_back(r, c);
    s.norm_sq = inner_product(m, m);
    a.support_.push_back(std::move(s));
  }

  // Off-torus elements are mutually orthogonal and orthogonal to the torus;
  // coordinates() relies on this, so check it once here.
  for (std::size_t x = a.rank(); x < a.dim(); ++x)
    for (std::size_t y = 0; y < x; ++y)
      if (sgn(a.pairing_with_basis(a.basis_element(y).matrix, x)) != 0)
        throw InvariantError("basis of " + a.name() + " is not orthogonal off the torus");

  a.gram_ = RationalMatrix(a.rank(), a.rank());
  for (std::size_t x = 0; x < a.rank(); ++x)
    for (std::size_t y = 0; y < a.rank(); ++y) a.gram_(x, y) = inner_product(a.torus_[x].matrix, a.torus_[y].matrix);
  auto inv = inverse(a.gram_);
  if (!inv) throw InvariantError("torus basis of " + a.name() + " is degenerate");
  a.gram_inverse_ = *inv;
  return a;
}

}  // namespace rootspace
