#pragma once

#include "hhbv/bv_table.hpp"
#include "hhbv/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hhbv {

/// Degree-preserving unital map between two tables, given on monomials.
/// An image is nullopt where the window does not determine it.
struct IsoWitness {
  std::vector<std::optional<Element>> images;
  bool preserves_product = false;
  bool preserves_delta = false;
  bool preserves_bracket = false;

  /// Image of a linear combination; nullopt if some needed image is unknown.
  std::optional<Element> apply(const BVTable& target, const Element& x) const;
  /// Matrix of the map from source degree d to target degree d (monomial bases).
  IntMatrix degree_matrix(const BVTable& source, const BVTable& target, int degree) const;
};

/// Monomials that are not, up to a unit, a product of two non-unit monomials.
/// Throws NotFinitelyGenerated if they do not generate every monomial.
std::vector<std::size_t> infer_generators(const BVTable& t);

struct AlgebraMapSearch {
  std::vector<std::size_t> generators;
  std::vector<IsoWitness> maps;
  /// Every generator degree lies in both windows and every in-window monomial gets an image.
  bool conclusive = false;
};

/// Unital algebra isomorphisms source → target on the window, found by
/// choosing generator images in the target (all nonzero elements of the
/// right degree over F_p; over Z, coefficients ±1 on free lines and any
/// residue on torsion lines) and keeping the multiplicative bijections.
/// Order: images enumerated lexicographically, first coordinate fastest.
AlgebraMapSearch enumerate_algebra_isomorphisms(const BVTable& source, const BVTable& target,
                                                std::optional<std::vector<std::size_t>> generators = std::nullopt);
AlgebraMapSearch enumerate_algebra_automorphisms(const BVTable& t, std::optional<std::vector<std::size_t>> generators = std::nullopt);

/// Why one candidate algebra isomorphism fails to intertwine Δ or the bracket.
struct Refutation {
  std::vector<std::optional<Element>> generator_images;  // by generator position
  std::vector<std::size_t> monomials;                    // the failing monomial (Δ) or pair (bracket)
  std::string detail;
};

struct IsoDecision {
  bool isomorphic = false;
  std::optional<IsoWitness> witness;
  std::vector<std::size_t> generators;
  std::vector<Refutation> refutations;  // one per candidate when not isomorphic
  bool conclusive = false;
  std::string reason;
};

/// Throws WindowNonConclusive when a negative answer would rest on a window
/// too small to see every generator image.
IsoDecision bv_isomorphic(const BVTable& t1, const BVTable& t2);
IsoDecision gerstenhaber_isomorphic(const BVTable& t1, const BVTable& t2);

/// Re-evaluates the named failure of a refutation; true iff it still fails.
bool recheck_refutation(const BVTable& t1, const BVTable& t2, const std::vector<std::size_t>& generators, const Refutation& r,
                        bool bracket_mode);

/// Table with Δ' = w ∘ Δ ∘ w^{-1} for an automorphism w of t.
BVTable transport_by_involution(const BVTable& t, const IsoWitness& w);
/// Bracket table w ∘ {w^{-1} -, w^{-1} -}.
BracketTable transport_bracket(const BVTable& t, const BracketTable& b, const IsoWitness& w);

}  // namespace hhbv
