#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hopfcore {

// Exact scalars. GMP keeps arithmetic results in lowest terms with a
// positive denominator; text input goes through parse_rational, which
// canonicalizes.
using Rational = mpq_class;

// Accepts "p", "p/q", with an optional leading sign. Throws FormatError.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

Rational factorial(unsigned n);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace hopfcore
