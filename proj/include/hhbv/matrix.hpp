#pragma once

#include "hhbv/integer.hpp"
#include "hhbv/ring.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace hhbv {

using Vector = std::vector<Integer>;

/// Dense row-major matrix of exact integers. A matrix with zero rows or
/// columns is valid and represents a map to or from the zero module.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> entries, std::size_t rows, std::size_t cols);
  static IntMatrix from_columns(std::span<const Vector> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;

  IntMatrix transposed() const;
  bool is_zero() const;

  /// Entrywise reduction into the canonical residues of `ring`.
  IntMatrix reduced(const Ring& ring) const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  Vector operator*(const Vector& v) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-() const;
  IntMatrix scaled(const Integer& s) const;

  /// Rows [r0, r1) as a new matrix.
  IntMatrix row_block(std::size_t r0, std::size_t r1) const;
  IntMatrix col_block(std::size_t c0, std::size_t c1) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

bool is_zero_vector(const Vector& v);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

}  // namespace hhbv
