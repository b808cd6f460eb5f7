#pragma once

#include "hhbv/matrix.hpp"

#include <optional>
#include <vector>

namespace hhbv::modp {

/// Reduced row echelon form over F_p; `pivots[i]` is the pivot column of row i.
struct Echelon {
  IntMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

Echelon rref(const IntMatrix& m, long long p);
std::size_t rank(const IntMatrix& m, long long p);
std::vector<Vector> nullspace(const IntMatrix& m, long long p);
std::optional<IntMatrix> inverse(const IntMatrix& m, long long p);
/// Solves m·x = b; nullopt when b is not in the column span.
std::optional<Vector> solve(const IntMatrix& m, const Vector& b, long long p);

/// Incrementally grown basis of a subspace of F_p^n.
class SpanBuilder {
 public:
  SpanBuilder(std::size_t n, long long p) : n_(n), p_(p) {}
  /// Adds v if it is independent of the current span; reports whether it was added.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t dimension() const { return rows_.size(); }

 private:
  Vector reduce(Vector v) const;
  std::size_t n_;
  long long p_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace hhbv::modp
