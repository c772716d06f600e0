#pragma once

#include <string>

#include "polyfeat/polynomial.hpp"

namespace polyfeat {

/// Reads an SMT-LIB script fragment and extracts the distinct polynomials
/// appearing in asserted sign conditions. Supported:
///   (set-logic ...), (set-info ...), (check-sat), (exit), (get-model)
///   (declare-const x Real), (declare-fun x () Real)
///   (assert F) with F built from and/or/not over atoms
///   atoms: (= < <= > >= t1 t2 ...), chains split pairwise as t_i - t_{i+1}
///   terms: + - * (n-ary), unary -, numerals, decimals, (/ num num) constants,
///          declared real constants
/// Boolean structure is discarded; each atom contributes lhs - rhs once.
/// Anything else (division by variables, let, quantifiers, define-fun,
/// non-real sorts) is rejected.
ProblemInstance parse_problem_smt(const std::string& text);

}  // namespace polyfeat
