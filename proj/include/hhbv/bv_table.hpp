#pragma once

#include "hhbv/integer.hpp"
#include "hhbv/ring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hhbv {

/// A basis line of a finite BV presentation. `order` is 0 for a free line
/// (or any line over a field) and m > 1 for a Z/m summand.
struct Monomial {
  std::string name;
  int degree = 0;
  Integer order = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Sparse linear combination of monomials; zero coefficients are never stored.
using Element = std::map<std::size_t, Integer>;

/// Degrees in which a table lists every basis line of the underlying infinite algebra.
struct DegreeWindow {
  int lo = 0;
  int hi = -1;
  bool contains(int d) const { return lo <= d && d <= hi; }
  friend bool operator==(const DegreeWindow&, const DegreeWindow&) = default;
};

/// Finite presentation of a graded-commutative algebra with a degree +1
/// operator Δ, inside a truncation. Every product and Δ value is either
/// known exactly or marked truncated (std::nullopt): a truncated entry
/// involves basis lines that the table does not carry.
class BVTable {
 public:
  BVTable() = default;
  BVTable(Ring ring, std::vector<Monomial> monomials, std::size_t unit);

  const Ring& ring() const { return ring_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const Monomial& monomial(std::size_t i) const { return monomials_.at(i); }
  int degree(std::size_t i) const { return monomials_.at(i).degree; }
  std::size_t unit() const { return unit_; }

  const std::optional<DegreeWindow>& window() const { return window_; }
  void set_window(std::optional<DegreeWindow> w) { window_ = w; }
  bool complete_degree(int d) const { return window_ && window_->contains(d); }

  const std::optional<Element>& product(std::size_t i, std::size_t j) const { return products_.at(i * size() + j); }
  void set_product(std::size_t i, std::size_t j, std::optional<Element> value);
  const std::optional<Element>& delta(std::size_t i) const { return delta_.at(i); }
  void set_delta(std::size_t i, std::optional<Element> value);

  /// Reduces coefficients (mod p, then mod each line's order) and drops zeros.
  Element normalize(Element e) const;

  std::optional<Element> multiply(const Element& x, const Element& y) const;
  std::optional<Element> apply_delta(const Element& x) const;

  Element basis_element(std::size_t i) const { return {{i, Integer(1)}}; }
  std::vector<std::size_t> monomials_of_degree(int d) const;
  /// Sorted list of degrees carried by at least one monomial.
  std::vector<int> degrees() const;
  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;

  friend bool operator==(const BVTable&, const BVTable&) = default;

 private:
  Ring ring_;
  std::vector<Monomial> monomials_;
  std::size_t unit_ = 0;
  std::optional<DegreeWindow> window_;
  std::vector<std::optional<Element>> products_;
  std::vector<std::optional<Element>> delta_;
};

/// Degree +1 bracket on the monomials of a table; nullopt marks truncation.
class BracketTable {
 public:
  BracketTable() = default;
  explicit BracketTable(std::size_t n) : n_(n), entries_(n * n) {}

  std::size_t size() const { return n_; }
  const std::optional<Element>& entry(std::size_t i, std::size_t j) const { return entries_.at(i * n_ + j); }
  void set(std::size_t i, std::size_t j, std::optional<Element> value) { entries_.at(i * n_ + j) = std::move(value); }
  /// Throws TruncationEscape when the entry is truncated.
  const Element& at(std::size_t i, std::size_t j) const;

  /// Bilinear extension; nullopt when any needed entry is truncated.
  std::optional<Element> bracket(const BVTable& t, const Element& x, const Element& y) const;

  friend bool operator==(const BracketTable&, const BracketTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::optional<Element>> entries_;
};

// Element arithmetic, unreduced; callers normalize through the table.
Element add(const Element& a, const Element& b);
Element scale(const Element& a, const Integer& c);
Element subtract(const Element& a, const Element& b);

/// Human-readable rendering, e.g. "u^2 + a u^4".
std::string format_element(const BVTable& t, const Element& e);

/// Restricts a table to a subset of its monomials (kept in the given order);
/// entries that reach a dropped monomial become truncated.
BVTable restrict_table(const BVTable& t, const std::vector<std::size_t>& keep, std::optional<DegreeWindow> window);

/// Renames generator letters inside monomial names (tokens like "g", "f^3").
BVTable rename_letters(const BVTable& t, const std::map<std::string, std::string>& letters);

}  // namespace hhbv
