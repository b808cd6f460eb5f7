#pragma once

#include "hhbv/bv_table.hpp"
#include "hhbv/hochschild.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hhbv {

/// Hochschild cochain in Hom(T(sĀ), A): a finite sum of terms word ↦ value.
/// Terms of different arity may be mixed. Only F_2 coefficients are used.
struct Cochain {
  std::map<Word, Vector> values;

  bool is_zero() const { return values.empty(); }
  /// Arity when every term has the same word length.
  std::optional<std::size_t> arity() const;
  friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// Cochain with the single term word ↦ basis element `value`.
Cochain cochain_term(const GradedAlgebra& a, Word word, std::size_t value);
/// Total degree |b| - |sa_1 ... sa_p| of a homogeneous cochain; throws if not homogeneous.
int cochain_degree(const GradedAlgebra& a, const Cochain& f);
/// Sum (mod 2 over F_2).
Cochain operator+(const Cochain& f, const Cochain& g);

/// One basis line of the cochain complex: the cochain word ↦ basis element `value`.
struct CochainBasisElement {
  Word word;
  std::size_t value = 0;
  int degree = 0;
};

/// Normalized Hochschild cochains of arity ≤ P over F_2 with
///   (d f)[sa_1|...|sa_{p+1}] = a_1 f[sa_2|...] + Σ_i f[...|s(a_i a_{i+1})|...] + f[sa_1|...|sa_p] a_{p+1}.
/// d lowers the total degree by one. Degree E is complete iff it lies below
/// (P+1)m + min|b|; cohomology at E is certified iff E+1 is complete.
class HochschildCochainComplex {
 public:
  HochschildCochainComplex(GradedAlgebra algebra, int max_arity);

  const GradedAlgebra& algebra() const { return algebra_; }
  int max_arity() const { return max_arity_; }
  std::vector<int> degrees() const;
  const std::vector<CochainBasisElement>& basis(int degree) const;
  std::size_t dim(int degree) const { return basis(degree).size(); }
  std::optional<std::size_t> position(const Word& word, std::size_t value) const;

  /// d: degree E → E-1.
  IntMatrix differential(int degree) const;
  bool is_complete(int degree) const { return degree < completeness_bound_; }
  bool is_certified(int degree) const { return is_complete(degree + 1); }
  /// Certified degrees carrying basis elements, ascending.
  std::vector<int> certified_degrees() const;

  Vector to_vector(const Cochain& f, int degree) const;
  Cochain from_vector(int degree, const Vector& v) const;

 private:
  GradedAlgebra algebra_;
  int max_arity_;
  int completeness_bound_;
  std::map<int, std::vector<CochainBasisElement>> blocks_;
  std::map<std::pair<Word, std::size_t>, std::size_t> positions_;
};

/// Throws UnsupportedRing unless the algebra is over F_2.
HochschildCochainComplex build_cochain_complex(const GradedAlgebra& a, int max_arity);

Cochain d2(const GradedAlgebra& a, const Cochain& f);
/// (f ∪ g)[sa_1|...|sa_{p+q}] = f[sa_1|...|sa_p] g[sa_{p+1}|...|sa_{p+q}].
Cochain cup(const GradedAlgebra& a, const Cochain& f, const Cochain& g);
/// (f ∘̄ g)[sa_1|...] = Σ_i f[sa_1|...|sa_i|s g[sa_{i+1}|...|sa_{i+q}]|...].
Cochain brace(const GradedAlgebra& a, const Cochain& f, const Cochain& g);
/// {f, g} = f ∘̄ g - g ∘̄ f (= the sum, mod 2).
Cochain gerst_bracket(const GradedAlgebra& a, const Cochain& f, const Cochain& g);

/// Linear functional on Hochschild chains: (a0, word) ↦ coefficient.
using DualChain = std::map<std::pair<std::size_t, Word>, Integer>;

/// Θ̂(f)(a0[sa_1|...|sa_p]) = θ(f[sa_1|...|sa_p] · a0). Raises degree by d = |θ|.
/// Throws NotDualizing when the algebra carries no dualizing functional.
DualChain theta_hat(const GradedAlgebra& a, const Cochain& f);
/// Matrix of Θ̂ from cochain degree E to the dual chain block in degree E+d.
IntMatrix theta_hat_matrix(const HochschildCochainComplex& cochains, const HochschildChainComplex& chains, int degree);

struct NamedCochain {
  std::string name;
  Cochain cochain;
};

/// Classes g^e f^k of HH^*(Λx_{-d}; Λx_{-d}) over F_2, k ≤ K: f^k sends
/// [sx|...|sx] (k letters) to 1 and g f^k sends it to x. Names "1", "f",
/// "f^k", "g", "g f", "g f^k".
std::vector<NamedCochain> exterior_sphere_cochain_basis(int d, int max_power);

struct HHBVResult {
  BVTable table;
  BracketTable cochain_bracket;  // via the brace operation, independent of Δ
  std::map<int, HomologyGroup> groups;
  std::vector<Cochain> representatives;  // one per table monomial
  int max_word = 0;
};

/// HH^*(A;A) over F_2 on the certified degrees with cup product, bracket
/// and Δ = Θ̂^{-1} ∘ B^∨ ∘ Θ̂. Named classes, when given, are used as the
/// basis wherever they form one; other degrees get names "h<E>_<i>".
/// Products and Δ values that leave the certified degrees are truncated.
HHBVResult delta_on_HH(const GradedAlgebra& a, int max_word, const std::vector<NamedCochain>& names = {});

}  // namespace hhbv
