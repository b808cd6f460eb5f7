#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hhbv {

class CompositionNonZero : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAChainMap : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedRing : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDualizing : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidAlgebra : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested degree lies outside the window in which the truncated complex is exact.
class WindowTooSmall : public std::runtime_error {
 public:
  WindowTooSmall(const std::string& what, std::vector<int> degrees)
      : std::runtime_error(what), uncertified_(std::move(degrees)) {}
  const std::vector<int>& uncertified_degrees() const { return uncertified_; }

 private:
  std::vector<int> uncertified_;
};

/// A product, Δ or bracket value needed by a computation is truncated in the table.
class TruncationEscape : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFinitelyGenerated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The window does not contain enough degrees to turn a failed search into a refutation.
class WindowNonConclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hhbv
