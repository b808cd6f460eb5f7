#include "hhbv/integer.hpp"

#include <cctype>
#include <stdexcept>

namespace hhbv {

Integer inverse_mod(const Integer& a, const Integer& p) {
  Integer r0 = p, r1 = mod_floor(a, p);
  Integer s0 = 0, s1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    Integer s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw std::domain_error("inverse_mod: element is not invertible");
  return mod_floor(s0, p);
}

std::string to_decimal(const Integer& x) { return x.str(); }

Integer parse_decimal(std::string_view text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  Integer value(std::string(text.substr(i)));
  return (text[0] == '-') ? Integer(-value) : value;
}

}  // namespace hhbv
