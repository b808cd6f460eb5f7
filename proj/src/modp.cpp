#include "hhbv/modp.hpp"

#include <stdexcept>

namespace hhbv::modp {

Echelon rref(const IntMatrix& m, long long p) {
  const Integer P(p);
  Echelon e{m.reduced(Ring::prime_field(p)), {}};
  IntMatrix& a = e.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(row, piv);
    Integer inv = inverse_mod(a(row, col), P);
    for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) = mod_floor(a(row, c) * inv, P);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      Integer f = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = mod_floor(a(r, c) - f * a(row, c), P);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t rank(const IntMatrix& m, long long p) { return rref(m, p).rank(); }

std::vector<Vector> nullspace(const IntMatrix& m, long long p) {
  Echelon e = rref(m, p);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = mod_floor(-e.reduced(i, free), Integer(p));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<IntMatrix> inverse(const IntMatrix& m, long long p) {
  if (m.rows() != m.cols()) throw std::invalid_argument("modp::inverse: non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  Echelon e = rref(aug, p);
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.col_block(n, 2 * n);
}

std::optional<Vector> solve(const IntMatrix& m, const Vector& b, long long p) {
  IntMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  Echelon e = rref(aug, p);
  Vector x(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    x[e.pivots[i]] = e.reduced(i, m.cols());
  }
  return x;
}

Vector SpanBuilder::reduce(Vector v) const {
  const Integer P(p_);
  for (auto& x : v) x = mod_floor(x, P);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Integer f = v[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < n_; ++c) v[c] = mod_floor(v[c] - f * rows_[i][c], P);
  }
  return v;
}

bool SpanBuilder::contains(const Vector& v) const { return is_zero_vector(reduce(v)); }

bool SpanBuilder::add(const Vector& v) {
  if (v.size() != n_) throw std::invalid_argument("SpanBuilder: length mismatch");
  Vector r = reduce(v);
  std::size_t piv = 0;
  while (piv < n_ && r[piv] == 0) ++piv;
  if (piv == n_) return false;
  const Integer P(p_);
  Integer inv = inverse_mod(r[piv], P);
  for (auto& x : r) x = mod_floor(x * inv, P);
  // keep earlier rows reduced against the new pivot so reduce() stays single-pass
  for (auto& row : rows_) {
    const Integer f = row[piv];
    if (f == 0) continue;
    for (std::size_t c = 0; c < n_; ++c) row[c] = mod_floor(row[c] - f * r[c], P);
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(piv);
  return true;
}

}  // namespace hhbv::modp
