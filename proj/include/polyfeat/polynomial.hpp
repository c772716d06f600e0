#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "polyfeat/rational.hpp"

namespace polyfeat {

/// Ordered set of distinct variable names. The order is a labelling
/// (x_1 ... x_n), not an elimination order.
class VariableSet {
public:
    explicit VariableSet(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> index_of(const std::string& name) const;

    bool operator==(const VariableSet&) const = default;

private:
    std::vector<std::string> names_;
};

/// One term: nonzero rational coefficient and one exponent per variable.
struct Monomial {
    Rational coeff;
    std::vector<int> exponents;

    int total_degree() const;
    bool same_exponents(const Monomial& other) const { return exponents == other.exponents; }
};

/// Canonical sparse polynomial: like terms combined, zero terms dropped,
/// monomials sorted in graded-lex descending order. Immutable after
/// construction; all operations return new values.
class Polynomial {
public:
    Polynomial() : nvars_(0) {}

    static Polynomial zero(int nvars);
    static Polynomial constant(int nvars, Rational c);
    static Polynomial variable(int nvars, int v);
    /// Normalizes an arbitrary term list (duplicates allowed, zeros allowed).
    static Polynomial from_monomials(int nvars, std::vector<Monomial> terms);

    int nvars() const { return nvars_; }
    bool is_zero() const { return monomials_.empty(); }
    bool is_constant() const;
    int monomial_count() const { return static_cast<int>(monomials_.size()); }
    const std::vector<Monomial>& monomials() const { return monomials_; }

    /// Degree in variable v (0-based); -1 for the zero polynomial.
    int degree_in(int v) const;
    /// Max total degree over monomials; -1 for the zero polynomial.
    int total_degree() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial pow(int exponent) const;

    Polynomial derivative(int v) const;

    /// Coefficients with respect to v: index k holds the coefficient of v^k
    /// as a polynomial (in the same variable space, with v absent).
    /// Size is degree_in(v)+1; empty for the zero polynomial.
    std::vector<Polynomial> coefficients_wrt(int v) const;
    Polynomial leading_coefficient_wrt(int v) const;

    /// True exact division; returns nothing if `divisor` does not divide.
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

    /// Flips the sign if the leading coefficient is negative.
    Polynomial sign_normalized() const;

    bool operator==(const Polynomial&) const = default;
    std::strong_ordering operator<=>(const Polynomial& other) const;

    std::string to_string(const VariableSet& vars) const;

private:
    int nvars_;
    std::vector<Monomial> monomials_;
};

/// Spec accessor d_v^{m,p} with 1-based m and v; range-checked.
int monomial_degree(const Polynomial& p, int m, int v);

/// A problem: P >= 1 non-zero polynomials over a shared variable set.
class ProblemInstance {
public:
    ProblemInstance(VariableSet vars, std::vector<Polynomial> polys);

    const VariableSet& variables() const { return vars_; }
    const std::vector<Polynomial>& polynomials() const { return polys_; }
    int poly_count() const { return static_cast<int>(polys_.size()); }
    int nvars() const { return vars_.size(); }

private:
    VariableSet vars_;
    std::vector<Polynomial> polys_;
};

}  // namespace polyfeat
