#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hypernil {

/// Exact rational scalar. GMP keeps every value canonical: the denominator
/// is positive and coprime to the numerator.
using Rational = mpq_class;

/// Parses "p", "-p", "p/q". Throws ParseError (without position) on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace hypernil
