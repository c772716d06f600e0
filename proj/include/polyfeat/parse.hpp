#pragma once

#include <string>

#include "polyfeat/polynomial.hpp"

namespace polyfeat {

/// Parses one polynomial expression over the given variables.
/// Grammar: integers and fractions (12, 3/4), identifiers, + - *,
/// ^ with a non-negative integer exponent, parentheses, unary +/-.
/// Products and powers are expanded eagerly into normal form.
Polynomial parse_polynomial(const std::string& text, const VariableSet& vars);

/// Parses the native problem format:
///   vars: x1, x2, x3
///   x1^2*x2 - x3
///   x1*x2^4*x3^2 + x1*x3
/// '#' starts a comment; blank lines are skipped. Every listed polynomial
/// must be non-zero.
ProblemInstance parse_problem_native(const std::string& text);

}  // namespace polyfeat
