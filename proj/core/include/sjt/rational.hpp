#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sjt {

// Exact rationals; gmp keeps mpq_class canonical (reduced, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (q > 0). Throws ParseError on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text, or "p" when the denominator is one.
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace sjt
