#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gwalab {

/// Exact rational scalar; GMP keeps it in lowest terms with a positive denominator.
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// q^e for any integer e (q must be nonzero when e < 0).
Rational power(const Rational& q, long e);

}  // namespace gwalab
