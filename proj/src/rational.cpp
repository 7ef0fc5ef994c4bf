#include "gwalab/rational.hpp"

#include <stdexcept>

#include "gwalab/errors.hpp"

namespace gwalab {

Rational parse_rational(std::string_view text) {
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw Error("not a rational literal: '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational power(const Rational& q, long e) {
  if (e < 0) {
    if (is_zero(q)) throw Error("negative power of zero");
    return power(Rational(1) / q, -e);
  }
  Rational result = 1;
  Rational base = q;
  auto n = static_cast<unsigned long>(e);
  while (n > 0) {
    if (n & 1U) result *= base;
    base *= base;
    n >>= 1U;
  }
  return result;
}

}  // namespace gwalab
