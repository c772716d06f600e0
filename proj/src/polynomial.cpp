#include "polyfeat/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "polyfeat/errors.hpp"

namespace polyfeat {

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

// Graded lex, descending: higher total degree first, then lexicographically
// larger exponent tuple first. A monomial order, so leading terms multiply.
bool grlex_greater(const std::vector<int>& a, const std::vector<int>& b) {
    int ta = std::accumulate(a.begin(), a.end(), 0);
    int tb = std::accumulate(b.begin(), b.end(), 0);
    if (ta != tb) return ta > tb;
    return a > b;
}

}  // namespace

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw InputError("variable set must not be empty");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (!valid_identifier(n)) throw InputError("invalid variable name '" + n + "'");
        if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
    }
}

std::optional<int> VariableSet::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

int Monomial::total_degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

Polynomial Polynomial::zero(int nvars) {
    Polynomial p;
    p.nvars_ = nvars;
    return p;
}

Polynomial Polynomial::constant(int nvars, Rational c) {
    std::vector<Monomial> terms;
    if (c != 0) terms.push_back({std::move(c), std::vector<int>(nvars, 0)});
    return from_monomials(nvars, std::move(terms));
}

Polynomial Polynomial::variable(int nvars, int v) {
    if (v < 0 || v >= nvars) throw InputError("variable index out of range");
    std::vector<int> e(nvars, 0);
    e[v] = 1;
    return from_monomials(nvars, {{Rational(1), std::move(e)}});
}

Polynomial Polynomial::from_monomials(int nvars, std::vector<Monomial> terms) {
    for (const auto& t : terms) {
        if (static_cast<int>(t.exponents.size()) != nvars)
            throw InputError("monomial exponent tuple has wrong arity");
        for (int e : t.exponents)
            if (e < 0) throw InputError("negative exponent in monomial");
    }
    std::sort(terms.begin(), terms.end(), [](const Monomial& a, const Monomial& b) {
        return grlex_greater(a.exponents, b.exponents);
    });
    Polynomial p;
    p.nvars_ = nvars;
    for (auto& t : terms) {
        if (!p.monomials_.empty() && p.monomials_.back().same_exponents(t)) {
            p.monomials_.back().coeff += t.coeff;
            if (p.monomials_.back().coeff == 0) p.monomials_.pop_back();
        } else if (t.coeff != 0) {
            p.monomials_.push_back(std::move(t));
        }
    }
    return p;
}

bool Polynomial::is_constant() const {
    return monomials_.empty() ||
           (monomials_.size() == 1 && monomials_[0].total_degree() == 0);
}

int Polynomial::degree_in(int v) const {
    if (v < 0 || v >= nvars_) throw InputError("variable index out of range");
    if (monomials_.empty()) return -1;
    int d = 0;
    for (const auto& m : monomials_) d = std::max(d, m.exponents[v]);
    return d;
}

int Polynomial::total_degree() const {
    if (monomials_.empty()) return -1;
    // Monomials are grlex-sorted, the first has the max total degree.
    return monomials_.front().total_degree();
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    if (nvars_ != other.nvars_) throw InputError("variable count mismatch in +");
    std::vector<Monomial> terms = monomials_;
    terms.insert(terms.end(), other.monomials_.begin(), other.monomials_.end());
    return from_monomials(nvars_, std::move(terms));
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& m : p.monomials_) m.coeff = -m.coeff;
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (nvars_ != other.nvars_) throw InputError("variable count mismatch in *");
    std::vector<Monomial> terms;
    terms.reserve(monomials_.size() * other.monomials_.size());
    for (const auto& a : monomials_) {
        for (const auto& b : other.monomials_) {
            Monomial m;
            m.coeff = a.coeff * b.coeff;
            m.exponents.resize(nvars_);
            for (int i = 0; i < nvars_; ++i)
                m.exponents[i] = a.exponents[i] + b.exponents[i];
            terms.push_back(std::move(m));
        }
    }
    return from_monomials(nvars_, std::move(terms));
}

Polynomial Polynomial::pow(int exponent) const {
    if (exponent < 0) throw InputError("negative exponent");
    Polynomial result = constant(nvars_, 1);
    Polynomial base = *this;
    int e = exponent;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Polynomial Polynomial::derivative(int v) const {
    if (v < 0 || v >= nvars_) throw InputError("variable index out of range");
    std::vector<Monomial> terms;
    for (const auto& m : monomials_) {
        if (m.exponents[v] == 0) continue;
        Monomial d = m;
        d.coeff *= m.exponents[v];
        d.exponents[v] -= 1;
        terms.push_back(std::move(d));
    }
    return from_monomials(nvars_, std::move(terms));
}

std::vector<Polynomial> Polynomial::coefficients_wrt(int v) const {
    int d = degree_in(v);
    if (d < 0) return {};
    std::vector<std::vector<Monomial>> buckets(d + 1);
    for (const auto& m : monomials_) {
        Monomial c = m;
        int k = c.exponents[v];
        c.exponents[v] = 0;
        buckets[k].push_back(std::move(c));
    }
    std::vector<Polynomial> out;
    out.reserve(d + 1);
    for (auto& b : buckets) out.push_back(from_monomials(nvars_, std::move(b)));
    return out;
}

Polynomial Polynomial::leading_coefficient_wrt(int v) const {
    auto cs = coefficients_wrt(v);
    if (cs.empty()) return zero(nvars_);
    return cs.back();
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    if (nvars_ != divisor.nvars_) throw InputError("variable count mismatch in division");
    Polynomial remainder = *this;
    std::vector<Monomial> quotient;
    const Monomial& dlead = divisor.monomials_.front();
    while (!remainder.is_zero()) {
        const Monomial& rlead = remainder.monomials_.front();
        Monomial q;
        q.exponents.resize(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            int e = rlead.exponents[i] - dlead.exponents[i];
            if (e < 0) return std::nullopt;
            q.exponents[i] = e;
        }
        q.coeff = rlead.coeff / dlead.coeff;
        Polynomial t = from_monomials(nvars_, {q});
        remainder = remainder - t * divisor;
        quotient.push_back(std::move(q));
    }
    return from_monomials(nvars_, std::move(quotient));
}

Polynomial Polynomial::sign_normalized() const {
    if (is_zero() || monomials_.front().coeff > 0) return *this;
    return -*this;
}

std::strong_ordering Polynomial::operator<=>(const Polynomial& other) const {
    std::size_t n = std::min(monomials_.size(), other.monomials_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Monomial& a = monomials_[i];
        const Monomial& b = other.monomials_[i];
        if (a.exponents != b.exponents)
            return grlex_greater(a.exponents, b.exponents) ? std::strong_ordering::less
                                                           : std::strong_ordering::greater;
        int c = cmp(a.coeff, b.coeff);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (monomials_.size() != other.monomials_.size())
        return monomials_.size() < other.monomials_.size() ? std::strong_ordering::less
                                                           : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Polynomial::to_string(const VariableSet& vars) const {
    if (vars.size() != nvars_) throw InputError("variable set arity mismatch");
    if (monomials_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& m : monomials_) {
        Rational c = m.coeff;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;

        bool has_vars = m.total_degree() > 0;
        bool coeff_printed = false;
        if (!has_vars || c != 1) {
            out << c.get_str();
            coeff_printed = true;
        }
        bool first_factor = !coeff_printed;
        for (int v = 0; v < nvars_; ++v) {
            int e = m.exponents[v];
            if (e == 0) continue;
            if (!first_factor) out << "*";
            first_factor = false;
            out << vars.name(v);
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

int monomial_degree(const Polynomial& p, int m, int v) {
    if (m < 1 || m > p.monomial_count()) throw InputError("monomial index out of range");
    if (v < 1 || v > p.nvars()) throw InputError("variable index out of range");
    return p.monomials()[m - 1].exponents[v - 1];
}

ProblemInstance::ProblemInstance(VariableSet vars, std::vector<Polynomial> polys)
    : vars_(std::move(vars)), polys_(std::move(polys)) {
    if (polys_.empty()) throw InputError("problem must contain at least one polynomial");
    for (const auto& p : polys_) {
        if (p.nvars() != vars_.size())
            throw InputError("polynomial arity does not match the variable set");
        if (p.is_zero()) throw InputError("zero polynomial is not allowed in a problem");
    }
}

}  // namespace polyfeat
