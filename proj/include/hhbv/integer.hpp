#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace hhbv {

/// Arbitrary-precision signed integer used for every coefficient in the library.
using Integer = boost::multiprecision::cpp_int;

/// Least non-negative residue of `x` modulo `m` (m > 0).
inline Integer mod_floor(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r;
}

/// Reduces `x` modulo `order`; order 0 means "free", no reduction.
inline Integer reduce_by_order(const Integer& x, const Integer& order) {
  return order == 0 ? x : mod_floor(x, order);
}

inline Integer gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Inverse of `a` modulo the prime `p`; `a` must be nonzero mod p.
Integer inverse_mod(const Integer& a, const Integer& p);

std::string to_decimal(const Integer& x);

/// Parses an optionally signed decimal string. Throws std::invalid_argument.
Integer parse_decimal(std::string_view text);

inline int sign_of_parity(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace hhbv
