#include "polyfeat/resultant.hpp"

#include <utility>

#include "polyfeat/errors.hpp"

namespace polyfeat {

std::vector<std::vector<Polynomial>> sylvester_matrix(const Polynomial& p,
                                                      const Polynomial& q, int v) {
    int dp = p.degree_in(v);
    int dq = q.degree_in(v);
    if (dp < 1 || dq < 1)
        throw InputError("resultant requires positive degree in the chosen variable");
    int n = p.nvars();
    int size = dp + dq;

    std::vector<Polynomial> pc = p.coefficients_wrt(v);  // index = power of v
    std::vector<Polynomial> qc = q.coefficients_wrt(v);

    std::vector<std::vector<Polynomial>> m(size,
                                           std::vector<Polynomial>(size, Polynomial::zero(n)));
    // dp rows of q's coefficients first, then dq rows of p's.
    for (int r = 0; r < dp; ++r)
        for (int k = 0; k <= dq; ++k) m[r][r + k] = qc[dq - k];
    for (int r = 0; r < dq; ++r)
        for (int k = 0; k <= dp; ++k) m[dp + r][r + k] = pc[dp - k];
    return m;
}

namespace {

// Fraction-free (Bareiss) determinant over the polynomial ring. Row swaps
// only; every division is exact.
Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m, int nvars) {
    int n = static_cast<int>(m.size());
    if (n == 0) return Polynomial::constant(nvars, 1);
    int sign = 1;
    Polynomial prev_pivot = Polynomial::constant(nvars, 1);
    for (int k = 0; k < n - 1; ++k) {
        int pivot_row = -1;
        for (int r = k; r < n; ++r) {
            if (!m[r][k].is_zero()) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row < 0) return Polynomial::zero(nvars);
        if (pivot_row != k) {
            std::swap(m[pivot_row], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto div = num.divide_exact(prev_pivot);
                if (!div)
                    throw std::logic_error("Bareiss elimination: inexact division");
                m[i][j] = std::move(*div);
            }
            m[i][k] = Polynomial::zero(nvars);
        }
        prev_pivot = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

Polynomial resultant(const Polynomial& p, const Polynomial& q, int v) {
    auto m = sylvester_matrix(p, q, v);
    return bareiss_determinant(std::move(m), p.nvars());
}

Polynomial discriminant(const Polynomial& p, int v) {
    if (p.degree_in(v) < 2)
        throw InputError("discriminant requires degree >= 2 in the chosen variable");
    return resultant(p, p.derivative(v), v);
}

}  // namespace polyfeat
