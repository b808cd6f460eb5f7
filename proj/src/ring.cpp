#include "hhbv/ring.hpp"

#include <charconv>
#include <stdexcept>

namespace hhbv {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Ring Ring::prime_field(long long p) {
  if (!is_prime(p)) throw std::invalid_argument("F_p requires p prime, got " + std::to_string(p));
  return {Kind::PrimeField, p};
}

bool Ring::is_unit(const Integer& x) const {
  switch (kind) {
    case Kind::Integers:
      return x == 1 || x == -1;
    case Kind::Rationals:
      return x != 0;
    case Kind::PrimeField:
      return normalize(x) != 0;
  }
  return false;
}

std::string Ring::name() const {
  switch (kind) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::PrimeField:
      return "F" + std::to_string(p);
  }
  return "?";
}

Ring parse_ring(std::string_view text) {
  if (text == "Z") return Ring::integers();
  if (text == "Q") return Ring::rationals();
  if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
    long long p = 0;
    auto body = text.substr(1);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec == std::errc() && ptr == body.data() + body.size()) return Ring::prime_field(p);
  }
  throw std::invalid_argument("unknown ring '" + std::string(text) + "' (expected Z, Q or Fp)");
}

}  // namespace hhbv
