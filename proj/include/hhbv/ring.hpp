#pragma once

#include "hhbv/integer.hpp"

#include <string>
#include <string_view>

namespace hhbv {

/// Ground ring: the integers, the rationals, or a prime field F_p.
struct Ring {
  enum class Kind { Integers, Rationals, PrimeField };

  Kind kind = Kind::Integers;
  long long p = 0;

  static Ring integers() { return {Kind::Integers, 0}; }
  static Ring rationals() { return {Kind::Rationals, 0}; }
  static Ring prime_field(long long p);

  bool is_field() const { return kind != Kind::Integers; }
  bool is_prime_field() const { return kind == Kind::PrimeField; }
  long long characteristic() const { return kind == Kind::PrimeField ? p : 0; }

  /// Canonical representative: residue in [0,p) over F_p, unchanged otherwise.
  Integer normalize(const Integer& x) const {
    return kind == Kind::PrimeField ? mod_floor(x, Integer(p)) : x;
  }

  bool is_unit(const Integer& x) const;

  /// "Z", "Q", or "F<p>".
  std::string name() const;

  friend bool operator==(const Ring&, const Ring&) = default;
};

/// Accepts Z, Q, F2, F3, Fp with p prime (also "Fp:5"-free spellings like "F5").
Ring parse_ring(std::string_view text);

bool is_prime(long long n);

}  // namespace hhbv
