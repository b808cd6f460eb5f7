#include "hhbv/snf.hpp"

#include <optional>

namespace hhbv {
namespace {

// Working state: A is reduced in place; every row operation is mirrored on U
// (and inversely on U_inv), every column operation on V (inversely on V_inv).
struct Reducer {
  IntMatrix A, U, U_inv, V, V_inv;

  explicit Reducer(const IntMatrix& m)
      : A(m),
        U(IntMatrix::identity(m.rows())),
        U_inv(IntMatrix::identity(m.rows())),
        V(IntMatrix::identity(m.cols())),
        V_inv(IntMatrix::identity(m.cols())) {}

  void swap_rows(std::size_t a, std::size_t b) {
    A.swap_rows(a, b);
    U.swap_rows(a, b);
    U_inv.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    A.swap_cols(a, b);
    V.swap_cols(a, b);
    V_inv.swap_rows(a, b);
  }
  // row[dst] += k row[src]; inverse is col[src] -= k col[dst] on U_inv.
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    A.add_row_multiple(dst, src, k);
    U.add_row_multiple(dst, src, k);
    U_inv.add_col_multiple(src, dst, -k);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    A.add_col_multiple(dst, src, k);
    V.add_col_multiple(dst, src, k);
    V_inv.add_row_multiple(src, dst, -k);
  }
  void negate_row(std::size_t r) {
    A.negate_row(r);
    U.negate_row(r);
    U_inv.negate_col(r);
  }

  std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < A.rows(); ++i)
      for (std::size_t j = t; j < A.cols(); ++j) {
        if (A(i, j) == 0) continue;
        Integer a = abs(A(i, j));
        if (!best || a < best_abs) {
          best = {i, j};
          best_abs = a;
          if (a == 1) return best;
        }
      }
    return best;
  }

  // Clears row t and column t outside the pivot and enforces that the pivot
  // divides every entry of the trailing block.
  void reduce_at(std::size_t t) {
    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < A.rows(); ++i) {
        if (A(i, t) == 0) continue;
        Integer q = A(i, t) / A(t, t);
        add_row(i, t, -q);
        if (A(i, t) != 0) {
          swap_rows(i, t);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < A.cols(); ++j) {
        if (A(t, j) == 0) continue;
        Integer q = A(t, j) / A(t, t);
        add_col(j, t, -q);
        if (A(t, j) != 0) {
          swap_cols(j, t);
          changed = true;
        }
      }
      if (changed) continue;
      bool divides_all = true;
      for (std::size_t i = t + 1; i < A.rows() && divides_all; ++i)
        for (std::size_t j = t + 1; j < A.cols(); ++j)
          if (A(i, j) % A(t, t) != 0) {
            add_row(t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) return;
    }
  }
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m) {
  Reducer r(m);
  SNFResult out;
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    auto pivot = r.smallest_entry(t);
    if (!pivot) break;
    r.swap_rows(t, pivot->first);
    r.swap_cols(t, pivot->second);
    r.reduce_at(t);
    if (r.A(t, t) < 0) r.negate_row(t);
    out.invariant_factors.push_back(r.A(t, t));
  }
  out.U = std::move(r.U);
  out.U_inv = std::move(r.U_inv);
  out.V = std::move(r.V);
  out.V_inv = std::move(r.V_inv);
  return out;
}

Integer AbelianGroup::torsion_order() const {
  Integer n = 1;
  for (const auto& t : torsion) n *= t;
  return n;
}

AbelianGroup cokernel_of(const IntMatrix& m) {
  SNFResult snf = smith_normal_form(m);
  AbelianGroup g;
  g.free_rank = m.rows() - snf.rank();
  for (const auto& d : snf.invariant_factors)
    if (d != 1) g.torsion.push_back(d);
  return g;
}

}  // namespace hhbv
