#pragma once

#include <gmpxx.h>

#include <string>

namespace polyfeat {

/// Exact arbitrary-precision rational, always stored in canonical form.
using Rational = mpq_class;

inline int sgn(const Rational& q) { return ::sgn(q); }

/// Renders q as a plain decimal string with at most `max_significant`
/// significant digits. Terminating expansions shorter than the limit are
/// printed exactly ("1/2" -> "0.5"); otherwise the last digit is rounded
/// half away from zero. Never uses exponent notation.
std::string to_decimal_string(const Rational& q, int max_significant = 17);

/// Parses an integer ("-12"), fraction ("3/4") or decimal ("1.25") literal
/// into an exact rational. Throws InputError on anything else.
Rational rational_from_string(const std::string& text);

}  // namespace polyfeat
