#pragma once

#include "hhbv/matrix.hpp"

#include <vector>

namespace hhbv {

/// Smith normal form U·A·V = D with D = diag(d_1, ..., d_r, 0, ...) and
/// d_1 | d_2 | ... | d_r, all d_i > 0. U and V are unimodular; their
/// inverses are tracked alongside so kernels and images can be lifted.
struct SNFResult {
  std::vector<Integer> invariant_factors;  // the nonzero diagonal entries
  IntMatrix U, V;
  IntMatrix U_inv, V_inv;

  std::size_t rank() const { return invariant_factors.size(); }
  /// D reconstructed from the invariant factors at the original shape.
  IntMatrix diagonal(std::size_t rows, std::size_t cols) const {
    return IntMatrix::diagonal(invariant_factors, rows, cols);
  }
};

SNFResult smith_normal_form(const IntMatrix& m);

/// Invariant factors of the abelian group Z^rows / (column span of m) that
/// are not 1, together with its free rank.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, divisibility chain

  Integer torsion_order() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

AbelianGroup cokernel_of(const IntMatrix& m);

}  // namespace hhbv
