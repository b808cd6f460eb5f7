#pragma once

#include "hhbv/graded_algebra.hpp"
#include "hhbv/homology.hpp"

#include <map>
#include <span>
#include <vector>

namespace hhbv {

/// Letters of a bar word: indices of augmentation-ideal basis elements.
using Word = std::vector<std::size_t>;

/// a0[sa_1|...|sa_p] in the normalized Hochschild chain complex.
struct ChainBasisElement {
  std::size_t a0 = 0;
  Word word;
  int degree = 0;
  friend bool operator==(const ChainBasisElement&, const ChainBasisElement&) = default;
};

/// Degree of a0[sa_1|...|sa_p]: |a0| + Σ (|a_i| + 1).
int chain_degree(const GradedAlgebra& a, std::size_t a0, const Word& word);

/// Normalized Hochschild chains A ⊗ T(sĀ) on all words of length ≤ L, with
/// the differential d = d_2 (the algebra has no internal differential) and
/// Connes' boundary B.
///
/// With the differential
///   d a[sa_1|...|sa_k] = (-1)^{|a|} a a_1 [sa_2|...|sa_k]
///                      + Σ_i (-1)^{ε_i} a[...|s(a_i a_{i+1})|...]
///                      - (-1)^{|sa_k| ε_{k-1}} a_k a [sa_1|...|sa_{k-1}],
/// ε_i = |a| + |sa_1| + ... + |sa_i|, and
///   B a_0[sa_1|...|sa_p] = Σ_i (-1)^{|sa_0...sa_{i-1}| |sa_i...sa_p|} 1[sa_i|...|sa_p|sa_0|...|sa_{i-1}].
///
/// Every letter has degree ≤ -m (m ≥ 1), so a degree D only contains words of
/// length ≤ -D/m. Degree D is complete (every basis element of that degree
/// is present) iff D > -(L+1)m; homology at D is certified iff D - 1 is
/// complete. B is exact on complete degrees.
class HochschildChainComplex {
 public:
  HochschildChainComplex(GradedAlgebra algebra, int max_word);

  const GradedAlgebra& algebra() const { return algebra_; }
  const Ring& ring() const { return algebra_.ring(); }
  int max_word() const { return max_word_; }

  /// Degrees with at least one basis element, ascending.
  std::vector<int> degrees() const;
  const std::vector<ChainBasisElement>& basis(int degree) const;
  std::size_t dim(int degree) const { return basis(degree).size(); }
  /// Position of a basis element inside its degree block.
  std::optional<std::size_t> position(std::size_t a0, const Word& word) const;

  /// d: C_D → C_{D-1}, shape dim(D-1) × dim(D).
  IntMatrix differential(int degree) const;
  /// B: C_D → C_{D+1}, shape dim(D+1) × dim(D). Exact when D+1 is complete.
  IntMatrix connes(int degree) const;

  bool is_complete(int degree) const { return degree > completeness_bound_; }
  bool is_certified(int degree) const { return is_complete(degree - 1); }
  /// Certified degrees among [lowest basis degree, 0], descending.
  std::vector<int> certified_degrees() const;
  /// Throws WindowTooSmall listing every requested degree that is not certified.
  void require_certified(std::span<const int> degrees) const;

  /// Coefficients of d and B on a single basis element, as (a0, word) → coefficient.
  std::map<std::pair<std::size_t, Word>, Integer> apply_differential(const ChainBasisElement& e) const;
  std::map<std::pair<std::size_t, Word>, Integer> apply_connes(const ChainBasisElement& e) const;

 private:
  GradedAlgebra algebra_;
  int max_word_;
  int completeness_bound_;
  std::map<int, std::vector<ChainBasisElement>> blocks_;
  std::map<std::pair<std::size_t, Word>, std::size_t> positions_;
};

HochschildChainComplex build_chain_complex(const GradedAlgebra& a, int max_word);

/// B_D for every degree D on which B is exact.
std::map<int, IntMatrix> connes_B(const GradedAlgebra& a, int max_word);

// Dual complex C_*(A;A)^∨. The dual of the basis block in chain degree D sits
// in degree E = -D. Signs: d^∨(φ) = (-1)^{|φ|+1} φ∘d and B^∨(φ) = (-1)^{|φ|} φ∘B.

/// d^∨: degree E → E-1, shape dim(-E-1... ) i.e. (chain dim at -E+1) × (chain dim at -E).
IntMatrix dual_differential(const HochschildChainComplex& c, int dual_degree);
/// B^∨: degree E → E+1, shape (chain dim at -E-1) × (chain dim at -E).
IntMatrix dual_connes(const HochschildChainComplex& c, int dual_degree);

/// HH^*(A;A^∨) = H_*(C_*(A;A)^∨) with the Δ induced by B^∨.
struct DualHochschild {
  HochschildChainComplex complex;
  /// Degree of the dualizing functional (0 when absent): ℍ_k = HH^*_{k+shift}.
  int shift = 0;
  std::map<int, HomologyGroup> groups;  // certified dual degrees
  std::map<int, IntMatrix> delta;       // E → E+1 where both ends are certified

  /// Cokernel of Δ: H_{E} → H_{E+1}.
  AbelianGroup delta_cokernel(int dual_degree) const;
  /// Throws WindowTooSmall listing the dual degrees in [lo, hi] that are not certified.
  void require_degrees(int lo, int hi) const;
};

/// Reinterprets the structure constants in another ring (reduction mod p).
GradedAlgebra change_ring(const GradedAlgebra& a, const Ring& ring);

DualHochschild hh_via_dual(const GradedAlgebra& a, const Ring& ring, int max_word);

}  // namespace hhbv
