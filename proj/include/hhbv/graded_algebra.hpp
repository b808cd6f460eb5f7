#pragma once

#include "hhbv/matrix.hpp"
#include "hhbv/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hhbv {

// Grading and signs
// -----------------
// Degrees are lower degrees: cohomology sits in non-positive degrees, so the
// generator of H^*(S^n) has degree -n. The Koszul rule is used throughout:
// moving an element of degree p past one of degree q costs (-1)^{pq}, and the
// suspension s shifts degrees by +1, |sa| = |a| + 1.

struct BasisElement {
  std::string name;
  int degree = 0;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Linear functional on the algebra, homogeneous of degree `degree`: it is
/// nonzero only on basis elements of degree -`degree`.
struct Functional {
  int degree = 0;
  Vector values;
  friend bool operator==(const Functional&, const Functional&) = default;
};

/// Finite-dimensional graded algebra presented by a multiplication table on a
/// basis containing the unit. The augmentation sends the unit to 1 and every
/// other basis element to 0, so the remaining basis elements span the
/// augmentation ideal.
class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  GradedAlgebra(Ring ring, std::vector<BasisElement> basis, std::size_t unit);

  const Ring& ring() const { return ring_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const BasisElement& element(std::size_t i) const { return basis_.at(i); }
  int degree(std::size_t i) const { return basis_.at(i).degree; }
  std::size_t unit() const { return unit_; }

  /// Basis indices of the augmentation ideal, in basis order.
  std::vector<std::size_t> augmentation_ideal() const;
  bool in_augmentation_ideal(std::size_t i) const { return i != unit_; }

  const Vector& product(std::size_t i, std::size_t j) const { return products_.at(i * dim() + j); }
  void set_product(std::size_t i, std::size_t j, Vector value);
  Vector multiply(const Vector& x, const Vector& y) const;
  Vector basis_vector(std::size_t i) const;

  const std::optional<Functional>& dualizing() const { return dualizing_; }
  void set_dualizing(std::optional<Functional> theta) { dualizing_ = std::move(theta); }

  bool graded_commutative() const { return graded_commutative_; }
  void set_graded_commutative(bool flag) { graded_commutative_ = flag; }

  /// Index of the basis element with the given name; throws if absent.
  std::size_t index_of(const std::string& name) const;

  friend bool operator==(const GradedAlgebra&, const GradedAlgebra&) = default;

 private:
  Ring ring_;
  std::vector<BasisElement> basis_;
  std::size_t unit_ = 0;
  std::vector<Vector> products_;
  std::optional<Functional> dualizing_;
  bool graded_commutative_ = false;
};

struct Violation {
  enum class Kind { Shape, Unit, Grading, Associativity, Commutativity, Connectivity, Duality };
  Kind kind;
  std::string detail;
};

std::string to_string(Violation::Kind kind);

struct ValidateOptions {
  /// Require the augmentation ideal to sit in degrees <= -2, which is what the
  /// Hochschild constructions need for finite degree blocks.
  bool require_connectivity = true;
};

/// Empty iff every structural invariant holds.
std::vector<Violation> validate(const GradedAlgebra& a, ValidateOptions options = {});

/// H^*(S^n) = Λ x_{-n}: basis {1, x}, x² = 0, fundamental class θ(x) = 1.
/// n = 1 is allowed for table-only use; it fails the connectivity check.
GradedAlgebra make_exterior_sphere(int n, const Ring& ring);

/// k[x]/(x^{height}) with |x| = -n, dualized by the top power.
GradedAlgebra make_truncated_polynomial(int n, int height, const Ring& ring);

/// Graded tensor product with (a⊗b)(a'⊗b') = (-1)^{|b||a'|} aa'⊗bb'.
GradedAlgebra tensor_product(const GradedAlgebra& lhs, const GradedAlgebra& rhs);

}  // namespace hhbv
