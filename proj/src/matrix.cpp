#include "rootspace/matrix.hpp"

#include <sstream>

#include "rootspace/errors.hpp"

namespace rootspace {

std::string to_string(ScalarFamily family) {
  switch (family) {
    case ScalarFamily::real: return "real";
    case ScalarFamily::complex: return "complex";
    case ScalarFamily::quaternion: return "quaternion";
  }
  return "?";
}

bool respects_family(const Quaternion& q, ScalarFamily family) {
  switch (family) {
    case ScalarFamily::real: return q.is_real();
    case ScalarFamily::complex: return q.is_complex();
    case ScalarFamily::quaternion: return true;
  }
  return false;
}

Matrix::Matrix(std::size_t n, ScalarFamily family) : n_(n), family_(family), entries_(n * n) {
  if (n == 0) throw StructuralError("matrix dimension must be positive");
}

void Matrix::set(std::size_t row, std::size_t col, Quaternion value) {
  if (row >= n_ || col >= n_) throw StructuralError("matrix index out of range");
  if (!respects_family(value, family_))
    throw StructuralError("entry " + to_string(value) + " not in the " + to_string(family_) + " family");
  entries_[row * n_ + col] = std::move(value);
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

Matrix Matrix::adjoint() const {
  Matrix out(n_, family_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) {
      const auto& e = entries_[r * n_ + c];
      if (!e.is_zero()) out.entries_[c * n_ + r] = e.conj();
    }
  return out;
}

Rational Matrix::real_trace() const {
  Rational t;
  for (std::size_t d = 0; d < n_; ++d) t += entries_[d * n_ + d].r;
  return t;
}

void Matrix::require_compatible(const Matrix& o, const char* op) const {
  if (n_ != o.n_)
    throw StructuralError(std::string(op) + ": dimension mismatch (" + std::to_string(n_) + " vs " +
                          std::to_string(o.n_) + ")");
  if (family_ != o.family_)
    throw StructuralError(std::string(op) + ": family mismatch (" + to_string(family_) + " vs " +
                          to_string(o.family_) + ")");
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_compatible(o, "add");
  for (std::size_t x = 0; x < entries_.size(); ++x)
    if (!o.entries_[x].is_zero()) entries_[x] += o.entries_[x];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_compatible(o, "subtract");
  for (std::size_t x = 0; x < entries_.size(); ++x)
    if (!o.entries_[x].is_zero()) entries_[x] -= o.entries_[x];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& e : entries_)
    if (!e.is_zero()) e *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  a.require_compatible(b, "multiply");
  const std::size_t n = a.n_;
  Matrix out(n, a.family_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto& aik = a.entries_[i * n + k];
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& bkj = b.entries_[k * n + j];
        if (bkj.is_zero()) continue;
        out.entries_[i * n + j] += aik * bkj;
      }
    }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.n_ == b.n_ && a.family_ == b.family_ && a.entries_ == b.entries_;
}

Matrix scale_left(const Quaternion& q, const Matrix& m) {
  if (!respects_family(q, m.family_)) throw StructuralError("scalar outside the matrix family");
  Matrix out(m.n_, m.family_);
  for (std::size_t x = 0; x < m.entries_.size(); ++x) out.entries_[x] = q * m.entries_[x];
  return out;
}

Matrix bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Rational inner_product(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim() || a.family() != b.family())
    throw StructuralError("inner_product: dimension or family mismatch");
  // Only the diagonal of A B* is needed: (A B*)_ii = sum_k A_ik conj(B_ik).
  Rational s;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      const auto& y = b(i, k);
      if (y.is_zero()) continue;
      s += real_pairing(x, y);
    }
  return s;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    os << (r == 0 ? "[" : " ");
    for (std::size_t c = 0; c < m.dim(); ++c) os << (c ? ", " : "[") << to_string(m(r, c));
    os << "]" << (r + 1 == m.dim() ? "]" : "\n");
  }
  return os.str();
}

}  // namespace rootspace
