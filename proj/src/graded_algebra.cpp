#include "hhbv/graded_algebra.hpp"


#include <sstream>
#include <stdexcept>

namespace hhbv {

GradedAlgebra::GradedAlgebra(Ring ring, std::vector<BasisElement> basis, std::size_t unit)
    : ring_(ring), basis_(std::move(basis)), unit_(unit), products_(basis_.size() * basis_.size(), Vector(basis_.size())) {
  if (unit_ >= basis_.size()) throw std::invalid_argument("GradedAlgebra: unit index out of range");
}

std::vector<std::size_t> GradedAlgebra::augmentation_ideal() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (i != unit_) out.push_back(i);
  return out;
}

void GradedAlgebra::set_product(std::size_t i, std::size_t j, Vector value) {
  if (value.size() != dim()) throw std::invalid_argument("set_product: coefficient vector has wrong length");
  for (auto& x : value) x = ring_.normalize(x);
  products_.at(i * dim() + j) = std::move(value);
}

Vector GradedAlgebra::basis_vector(std::size_t i) const {
  Vector v(dim());
  v.at(i) = 1;
  return v;
}

Vector GradedAlgebra::multiply(const Vector& x, const Vector& y) const {
  Vector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j] == 0) continue;
      const Vector& p = product(i, j);
      for (std::size_t k = 0; k < dim(); ++k)
        if (p[k] != 0) out[k] += x[i] * y[j] * p[k];
    }
  }
  for (auto& c : out) c = ring_.normalize(c);
  return out;
}

std::size_t GradedAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (basis_[i].name == name) return i;
  throw std::out_of_range("no basis element named '" + name + "'");
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::Shape:
      return "ShapeViolation";
    case Violation::Kind::Unit:
      return "UnitViolation";
    case Violation::Kind::Grading:
      return "GradingViolation";
    case Violation::Kind::Associativity:
      return "AssociativityViolation";
    case Violation::Kind::Commutativity:
      return "CommutativityViolation";
    case Violation::Kind::Connectivity:
      return "ConnectivityViolation";
    case Violation::Kind::Duality:
      return "DualityViolation";
  }
  return "?";
}

namespace {

bool is_invertible(const IntMatrix& m, const Ring& ring) {
  if (m.rows() != m.cols()) return false;
  Integer det = determinant(m);
  if (ring.is_prime_field()) return ring.normalize(det) != 0;
  return ring.is_unit(det);
}

}  // namespace

std::vector<Violation> validate(const GradedAlgebra& a, ValidateOptions options) {
  std::vector<Violation> out;
  const std::size_t n = a.dim();
  auto report = [&](Violation::Kind k, const std::string& what) { out.push_back({k, what}); };
  auto name = [&](std::size_t i) { return a.element(i).name; };

  if (a.degree(a.unit()) != 0) report(Violation::Kind::Grading, "unit has nonzero degree");

  for (std::size_t i = 0; i < n; ++i) {
    if (a.product(a.unit(), i) != a.basis_vector(i) || a.product(i, a.unit()) != a.basis_vector(i))
      report(Violation::Kind::Unit, "unit does not act trivially on " + name(i));
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& p = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (p[k] != 0 && a.degree(k) != a.degree(i) + a.degree(j))
          report(Violation::Kind::Grading, name(i) + "*" + name(j) + " has a component " + name(k) + " of degree " +
                                               std::to_string(a.degree(k)));
    }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector left = a.multiply(a.product(i, j), a.basis_vector(k));
        Vector right = a.multiply(a.basis_vector(i), a.product(j, k));
        if (left != right) report(Violation::Kind::Associativity, "(" + name(i) + name(j) + ")" + name(k));
      }

  if (a.graded_commutative()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Vector swapped = a.product(j, i);
        if (static_cast<long long>(a.degree(i)) * a.degree(j) % 2 != 0)
          for (auto& x : swapped) x = a.ring().normalize(-x);
        if (a.product(i, j) != swapped) report(Violation::Kind::Commutativity, name(i) + "*" + name(j));
      }
  }

  if (options.require_connectivity) {
    for (auto i : a.augmentation_ideal())
      if (a.degree(i) > -2)
        report(Violation::Kind::Connectivity, name(i) + " has degree " + std::to_string(a.degree(i)) + " > -2");
  }

  if (const auto& theta = a.dualizing()) {
    if (theta->values.size() != n) {
      report(Violation::Kind::Shape, "dualizing functional has wrong length");
      return out;
    }
    for (std::size_t i = 0; i < n; ++i)
      if (theta->values[i] != 0 && a.degree(i) != -theta->degree)
        report(Violation::Kind::Duality, "dualizing functional is not homogeneous of degree " + std::to_string(theta->degree));
    auto pair = [&](std::size_t i, std::size_t j) {
      Integer s = 0;
      const Vector& p = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) s += p[k] * theta->values[k];
      return a.ring().normalize(s);
    };
    IntMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        gram(i, j) = pair(i, j);
        if (!a.graded_commutative()) continue;
        Integer expected = static_cast<long long>(a.degree(i)) * a.degree(j) % 2 == 0 ? pair(j, i) : a.ring().normalize(-pair(j, i));
        if (gram(i, j) != expected) report(Violation::Kind::Duality, "θ(" + name(i) + name(j) + ") != ±θ(" + name(j) + name(i) + ")");
      }
    if (!is_invertible(gram, a.ring())) report(Violation::Kind::Duality, "pairing θ(ab) is not perfect");
  }
  return out;
}

GradedAlgebra make_exterior_sphere(int n, const Ring& ring) {
  if (n < 1) throw std::invalid_argument("make_exterior_sphere: n must be >= 1");
  GradedAlgebra a(ring, {{"1", 0}, {"x", -n}}, 0);
  a.set_product(0, 0, {1, 0});
  a.set_product(0, 1, {0, 1});
  a.set_product(1, 0, {0, 1});
  a.set_product(1, 1, {0, 0});
  a.set_dualizing(Functional{n, {0, 1}});
  a.set_graded_commutative(true);
  return a;
}

GradedAlgebra make_truncated_polynomial(int n, int height, const Ring& ring) {
  if (n < 1 || height < 2) throw std::invalid_argument("make_truncated_polynomial: need n >= 1 and height >= 2");
  std::vector<BasisElement> basis;
  for (int k = 0; k < height; ++k) basis.push_back({k == 0 ? "1" : (k == 1 ? "x" : "x^" + std::to_string(k)), -n * k});
  GradedAlgebra a(ring, basis, 0);
  const auto h = static_cast<std::size_t>(height);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      Vector v(h);
      if (i + j < h) v[i + j] = 1;
      a.set_product(i, j, v);
    }
  Vector theta(h);
  theta[h - 1] = 1;
  a.set_dualizing(Functional{n * (height - 1), theta});
  // x² ≠ 0 in odd degree breaks graded commutativity unless 2 = 0
  a.set_graded_commutative(n % 2 == 0 || height == 2 || ring.characteristic() == 2);
  return a;
}

GradedAlgebra tensor_product(const GradedAlgebra& lhs, const GradedAlgebra& rhs) {
  if (!(lhs.ring() == rhs.ring())) throw std::invalid_argument("tensor_product: ring mismatch");
  const std::size_t m = lhs.dim(), n = rhs.dim();
  std::vector<BasisElement> basis;
  auto joined = [](const std::string& a, const std::string& b) {
    if (a == "1") return b;
    if (b == "1") return a;
    return a + " " + b;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      basis.push_back({joined(lhs.element(i).name, rhs.element(j).name), lhs.degree(i) + rhs.degree(j)});
  GradedAlgebra t(lhs.ring(), basis, lhs.unit() * n + rhs.unit());
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t a2 = 0; a2 < m; ++a2)
        for (std::size_t b2 = 0; b2 < n; ++b2) {
          const int sign = (static_cast<long long>(rhs.degree(b)) * lhs.degree(a2)) % 2 == 0 ? 1 : -1;
          Vector v(m * n);
          const Vector& pa = lhs.product(a, a2);
          const Vector& pb = rhs.product(b, b2);
          for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) v[i * n + j] = sign * pa[i] * pb[j];
          t.set_product(a * n + b, a2 * n + b2, v);
        }
  if (lhs.dualizing() && rhs.dualizing()) {
    Vector theta(m * n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) theta[i * n + j] = lhs.dualizing()->values[i] * rhs.dualizing()->values[j];
    t.set_dualizing(Functional{lhs.dualizing()->degree + rhs.dualizing()->degree, theta});
  }
  t.set_graded_commutative(lhs.graded_commutative() && rhs.graded_commutative());
  return t;
}

}  // namespace hhbv
