#pragma once

#include "hhbv/bv_table.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hhbv {

/// A failed identity on a tuple of monomials (indices into the table).
struct AxiomViolation {
  std::string axiom;
  std::vector<std::size_t> monomials;
  std::string detail;
};

/// Outcome of an exhaustive check. Each axiom reports at most its first
/// failure in lexicographic tuple order; tuples whose evaluation needs a
/// truncated product, Δ or bracket value are skipped and counted.
struct AxiomReport {
  std::vector<AxiomViolation> violations;
  std::map<std::string, std::size_t> checked;
  std::map<std::string, std::size_t> skipped;

  bool passed() const { return violations.empty(); }
  const AxiomViolation* first_violation() const { return violations.empty() ? nullptr : &violations.front(); }
  const AxiomViolation* find(const std::string& axiom) const;
};

/// Structural checks on the product: unit, degrees, graded commutativity,
/// associativity, and that torsion lines are annihilated by their order.
AxiomReport check_table(const BVTable& t);

/// Table checks plus: deg Δm = deg m + 1, Δ respects torsion, Δ∘Δ = 0,
/// the square identity Δ(ab²) = Δ(a)b² + aΔ(b²) (characteristic 2 only,
/// where it is a consequence of the 7-term relation) and the 7-term relation
///   Δ(abc) = Δ(ab)c + (-1)^{|a|} aΔ(bc) + (-1)^{(|a|-1)|b|} bΔ(ac)
///          - (Δa)bc - (-1)^{|a|} a(Δb)c - (-1)^{|a|+|b|} ab(Δc)
/// on every triple of monomials.
AxiomReport verify_bv(const BVTable& t);

/// {a,b} = (-1)^{|a|}(Δ(ab) - (Δa)b - (-1)^{|a|} a(Δb)); truncated where any input is.
BracketTable bracket_from_delta(const BVTable& t);

/// Degree (+1), antisymmetry {a,b} = -(-1)^{(|a|+1)(|b|+1)}{b,a}, Jacobi
/// {a,{b,c}} = {{a,b},c} + (-1)^{(|a|+1)(|b|+1)}{b,{a,c}} and Poisson
/// {a,bc} = {a,b}c + (-1)^{(|a|+1)|b|} b{a,c}, plus the table checks.
AxiomReport verify_gerstenhaber(const BVTable& t, const BracketTable& bracket);
AxiomReport verify_gerstenhaber(const BVTable& t);

/// Per-degree comparison of a reduced table against a reference table over the same field.
struct DegreeComparison {
  int degree = 0;
  std::size_t reduced_dim = 0;
  /// reduced_dim plus the Tor(-, F_p) contribution of the degree below.
  std::size_t corrected_dim = 0;
  std::size_t reference_dim = 0;
  std::optional<std::size_t> reduced_delta_rank;
  std::optional<std::size_t> reference_delta_rank;
};

struct ReductionReport {
  BVTable reduced;
  std::vector<DegreeComparison> degrees;

  bool dimensions_match() const;
  bool corrected_dimensions_match() const;
  bool delta_ranks_match() const;
};

/// T ⊗ F_p (p prime) or T ⊗ Q (p = 0): free lines survive, Z/m lines survive
/// over F_p iff p | m. Table must be over Z.
BVTable reduce_mod_p(const BVTable& t, long long p);
/// Reduction together with a comparison against `reference` on the degrees
/// complete in both tables.
ReductionReport reduce_mod_p(const BVTable& t, long long p, const BVTable& reference);

/// Rank of Δ from degree d to d+1 over a field; nullopt if some value is truncated.
std::optional<std::size_t> delta_rank(const BVTable& t, int degree);

/// Monomial-by-monomial comparison, matching by name.
struct TableComparison {
  std::vector<std::string> mismatches;
  /// Entries known in `expected` but truncated in `actual`.
  std::vector<std::string> unknown;
  bool equal() const { return mismatches.empty() && unknown.empty(); }
};
TableComparison compare_tables(const BVTable& expected, const BVTable& actual);

}  // namespace hhbv
