#include "rootspace/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "rootspace/errors.hpp"

namespace rootspace {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t d = 0; d < n; ++d) m(d, d) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns, std::size_t rows) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw StructuralError("from_columns: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<long>(r * cols_),
                        data_.begin() + static_cast<long>((r + 1) * cols_));
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw StructuralError("matrix product: shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (sgn(y) != 0) out(i, j) += x * y;
      }
    }
  return out;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& v) {
  if (a.cols_ != v.size()) throw StructuralError("matrix-vector product: shape mismatch");
  RationalVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) out[i] += a(i, k) * v[k];
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw StructuralError("matrix difference: shape mismatch");
  RationalMatrix out = a;
  for (std::size_t x = 0; x < out.data_.size(); ++x) out.data_[x] -= b.data_[x];
  return out;
}

bool operator<(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return a.data_ < b.data_;
}

std::string to_string(const RationalVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
  os << ")";
  return os.str();
}

std::string to_string(const RationalMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) os << (r ? ", " : "") << to_string(m.row(r));
  os << "]";
  return os.str();
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw StructuralError("dot: length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

Rational pairing(const RationalVector& a, const RationalMatrix& gram, const RationalVector& b) {
  return dot(a, gram * b);
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw StructuralError("vector sum: length mismatch");
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw StructuralError("vector difference: length mismatch");
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RationalVector operator-(const RationalVector& a) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

RationalVector operator*(const Rational& s, const RationalVector& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

struct Block {
  std::vector<std::size_t> rows, cols;
};

// Connected components of the bipartite row/column sparsity graph.
std::vector<Block> sparsity_blocks(const RationalMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  DisjointSets sets(r + c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (sgn(m(i, j)) != 0) sets.unite(i, r + j);
  std::map<std::size_t, Block> by_root;
  for (std::size_t i = 0; i < r; ++i) by_root[sets.find(i)].rows.push_back(i);
  for (std::size_t j = 0; j < c; ++j) by_root[sets.find(r + j)].cols.push_back(j);
  std::vector<Block> blocks;
  for (auto& [root, b] : by_root) blocks.push_back(std::move(b));
  return blocks;
}

// Fraction-free Gauss-Jordan on an integer matrix. Each elimination step is
// divided exactly by the previous pivot, so entries stay minors of the input.
std::vector<std::size_t> fraction_free_reduce(std::vector<std::vector<Integer>>& a, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
    std::size_t p = rank;
    while (p < a.size() && sgn(a[p][col]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    const Integer piv = a[rank][col];
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank) continue;
      const Integer factor = a[i][col];
      for (std::size_t j = 0; j < cols; ++j) {
        Integer v = piv * a[i][j];
        if (sgn(factor) != 0 && sgn(a[rank][j]) != 0) v -= factor * a[rank][j];
        if (prev != 1) {
          if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t()))
            throw InvariantError("fraction-free elimination: inexact division");
          mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        }
        a[i][j] = std::move(v);
      }
    }
    prev = piv;
    pivot_cols.push_back(col);
    ++rank;
  }
  return pivot_cols;
}

// (free column, kernel vector) pairs in block-local coordinates.
std::vector<std::pair<std::size_t, RationalVector>> block_kernel(const RationalMatrix& m, const Block& b) {
  const std::size_t nc = b.cols.size();
  // Integerize each row by the lcm of its denominators.
  std::vector<std::vector<Integer>> a(b.rows.size(), std::vector<Integer>(nc));
  for (std::size_t i = 0; i < b.rows.size(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < nc; ++j) {
      const Rational& x = m(b.rows[i], b.cols[j]);
      if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    for (std::size_t j = 0; j < nc; ++j) {
      const Rational& x = m(b.rows[i], b.cols[j]);
      if (sgn(x) != 0) a[i][j] = x.get_num() * (l / x.get_den());
    }
  }
  const auto pivots = fraction_free_reduce(a, nc);
  std::vector<bool> is_pivot(nc, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<std::pair<std::size_t, RationalVector>> out;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(nc);
    x[f] = 1;
    for (std::size_t t = 0; t < pivots.size(); ++t) {
      if (sgn(a[t][f]) == 0) continue;
      Rational v(-a[t][f], a[t][pivots[t]]);
      v.canonicalize();
      x[pivots[t]] = v;
    }
    out.emplace_back(f, std::move(x));
  }
  return out;
}

}  // namespace

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  std::vector<std::pair<std::size_t, RationalVector>> found;  // (free column, vector)
  for (const auto& b : sparsity_blocks(m)) {
    if (b.cols.empty()) continue;
    for (auto& [f, local] : block_kernel(m, b)) {
      RationalVector x(m.cols());
      for (std::size_t j = 0; j < b.cols.size(); ++j)
        if (sgn(local[j]) != 0) x[b.cols[j]] = local[j];
      found.emplace_back(b.cols[f], std::move(x));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<RationalVector> out;
  out.reserve(found.size());
  for (auto& [col, x] : found) {
    if (!is_zero(m * x)) throw InvariantError("kernel_basis: vector does not annihilate the matrix");
    out.push_back(std::move(x));
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) { return m.cols() - kernel_basis(m).size(); }

std::size_t rank(const std::vector<RationalVector>& vectors) {
  if (vectors.empty()) return 0;
  return rank(RationalMatrix::from_columns(vectors, vectors.front().size()));
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (!m.square()) throw StructuralError("inverse: matrix not square");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(a(p, col)) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(col, j));
        std::swap(inv(p, j), inv(col, j));
      }
    const Rational s = 1 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= s;
      inv(col, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || sgn(a(i, col)) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(a(col, j)) != 0) a(i, j) -= f * a(col, j);
        if (sgn(inv(col, j)) != 0) inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Integer gershgorin_bound(const RationalMatrix& m) {
  Rational best;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational s;
    for (std::size_t c = 0; c < m.cols(); ++c) s += abs(m(r, c));
    if (s > best) best = s;
  }
  Integer ceil_value;
  mpz_cdiv_q(ceil_value.get_mpz_t(), best.get_num_mpz_t(), best.get_den_mpz_t());
  return ceil_value;
}

namespace {

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  for (b %= p; e; e >>= 1, b = mul_mod(b, b, p))
    if (e & 1) r = mul_mod(r, b, p);
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

u64 reduce_mod(const Integer& z, u64 p) { return mpz_fdiv_ui(z.get_mpz_t(), p); }

u64 eval_mod(const std::vector<u64>& poly, long long x, u64 p) {
  long long xm = x % static_cast<long long>(p);
  if (xm < 0) xm += static_cast<long long>(p);
  u64 acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = (mul_mod(acc, static_cast<u64>(xm), p) + *it) % p;
  return acc;
}

constexpr u64 kPrimes[] = {1000000007ULL, 998244353ULL, 1000000009ULL, 2147483647ULL, 4294967291ULL};

bool denominators_coprime(const RationalMatrix& m, u64 p) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (reduce_mod(m(r, c).get_den(), p) == 0) return false;
  return true;
}

}  // namespace

std::vector<u64> charpoly_mod(const RationalMatrix& m, u64 p) {
  if (!m.square()) throw StructuralError("charpoly: matrix not square");
  const std::size_t n = m.rows();
  std::vector<std::vector<u64>> h(n, std::vector<u64>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& x = m(r, c);
      const u64 den = reduce_mod(x.get_den(), p);
      if (den == 0) throw StructuralError("charpoly: denominator divisible by the modulus");
      h[r][c] = mul_mod(reduce_mod(x.get_num(), p), inv_mod(den, p), p);
    }
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (std::size_t k = 0; k < n; ++k) std::swap(h[k][piv], h[k][j + 1]);
    }
    const u64 inv = inv_mod(h[j + 1][j], p);
    for (std::size_t i = j + 2; i < n; ++i) {
      const u64 u = mul_mod(h[i][j], inv, p);
      if (u == 0) continue;
      for (std::size_t k = 0; k < n; ++k) h[i][k] = (h[i][k] + p - mul_mod(u, h[j + 1][k], p)) % p;
      for (std::size_t k = 0; k < n; ++k) h[k][j + 1] = (h[k][j + 1] + mul_mod(u, h[k][i], p)) % p;
    }
  }
  // Characteristic polynomials of leading principal blocks.
  std::vector<std::vector<u64>> poly(n + 1);
  poly[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<u64> next(k + 1, 0);
    const auto& prev = poly[k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] = (next[d + 1] + prev[d]) % p;
      next[d] = (next[d] + p - mul_mod(h[k - 1][k - 1], prev[d], p)) % p;
    }
    u64 t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t = mul_mod(t, h[k - i][k - i - 1], p);
      const u64 coef = mul_mod(t, h[k - i - 1][k - 1], p);
      if (coef == 0) continue;
      const auto& q = poly[k - i - 1];
      for (std::size_t d = 0; d < q.size(); ++d) next[d] = (next[d] + p - mul_mod(coef, q[d], p)) % p;
    }
    poly[k] = std::move(next);
  }
  return poly[n];
}

std::vector<Integer> integer_eigenvalues(const RationalMatrix& m, const Integer& bound) {
  if (!m.square()) throw StructuralError("integer_eigenvalues: matrix not square");
  if (sgn(bound) < 0) throw StructuralError("integer_eigenvalues: negative bound");
  const std::size_t n = m.rows();

  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && sgn(m(i, j)) != 0) sets.unite(i, j);
  std::map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks[sets.find(i)].push_back(i);

  std::map<Integer, std::size_t> dims;
  for (const auto& [root, idx] : blocks) {
    const std::size_t k = idx.size();
    RationalMatrix sub(k, k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(idx[a], idx[b]);

    if (k == 1) {
      const Rational& v = sub(0, 0);
      if (is_integer(v) && abs(v.get_num()) <= bound) dims[v.get_num()] += 1;
      continue;
    }
    Integer local = std::min(bound, gershgorin_bound(sub));
    if (!local.fits_slong_p() || local > 100000000)
      throw StructuralError("integer_eigenvalues: search bound too large");
    const long lim = local.get_si();

    std::vector<std::vector<u64>> polys;
    std::vector<u64> moduli;
    for (u64 p : kPrimes) {
      if (!denominators_coprime(sub, p)) continue;
      polys.push_back(charpoly_mod(sub, p));
      moduli.push_back(p);
      if (polys.size() == 2) break;
    }
    if (polys.empty()) throw StructuralError("integer_eigenvalues: no usable modulus");

    for (long mu = -lim; mu <= lim; ++mu) {
      bool root_everywhere = true;
      for (std::size_t t = 0; t < polys.size() && root_everywhere; ++t)
        root_everywhere = eval_mod(polys[t], mu, moduli[t]) == 0;
      if (!root_everywhere) continue;
      RationalMatrix shifted = sub;
      for (std::size_t d = 0; d < k; ++d) shifted(d, d) -= mu;
      const auto kernel = kernel_basis(shifted);
      if (!kernel.empty()) dims[Integer(mu)] += kernel.size();
    }
  }

  std::size_t total = 0;
  for (const auto& [mu, d] : dims) total += d;
  if (total != n)
    throw SpectrumError("non-integer spectrum: integer eigenspaces cover " + std::to_string(total) + " of " +
                        std::to_string(n) + " dimensions");
  std::vector<Integer> out;
  for (auto it = dims.rbegin(); it != dims.rend(); ++it) out.push_back(it->first);
  return out;
}

}  // namespace rootspace
