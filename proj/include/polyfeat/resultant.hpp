#pragma once

#include <vector>

#include "polyfeat/polynomial.hpp"

namespace polyfeat {

/// Sylvester matrix of p and q with respect to variable v (0-based).
/// Layout: the first deg_v(p) rows hold q's coefficients (descending in v,
/// shifted), the remaining deg_v(q) rows hold p's. This block order matches
/// the project's fixed resultant convention; swapping the blocks flips the
/// determinant sign by (-1)^(deg p * deg q).
/// Requires both degrees >= 1.
std::vector<std::vector<Polynomial>> sylvester_matrix(const Polynomial& p,
                                                      const Polynomial& q, int v);

/// Resultant of p and q with respect to v, computed by fraction-free
/// Bareiss elimination on the Sylvester matrix. Exact rational arithmetic.
Polynomial resultant(const Polynomial& p, const Polynomial& q, int v);

/// res(p, dp/dv, v); requires deg_v(p) >= 2. No leading-coefficient
/// division is applied.
Polynomial discriminant(const Polynomial& p, int v);

}  // namespace polyfeat
