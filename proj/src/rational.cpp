#include "polyfeat/rational.hpp"

#include <cctype>
#include <cstddef>

#include "polyfeat/errors.hpp"

namespace polyfeat {

std::string to_decimal_string(const Rational& q, int max_significant) {
    if (q == 0) return "0";
    mpz_class num = abs(q.get_num());
    const mpz_class& den = q.get_den();

    mpz_class ipart = num / den;
    mpz_class rem = num % den;

    std::string digits = ipart.get_str();
    int significant = (ipart == 0) ? 0 : static_cast<int>(digits.size());
    std::string frac;
    bool exact = (rem == 0);

    while (!exact) {
        if (significant >= max_significant) break;
        rem *= 10;
        mpz_class d = rem / den;
        rem %= den;
        frac += static_cast<char>('0' + d.get_si());
        if (significant > 0 || d != 0) ++significant;
        if (rem == 0) exact = true;
    }

    if (!exact) {
        // Round the last emitted digit half away from zero.
        rem *= 10;
        mpz_class next = rem / den;
        if (next >= 5) {
            std::string all = digits + frac;
            int i = static_cast<int>(all.size()) - 1;
            for (; i >= 0; --i) {
                if (all[i] == '9') {
                    all[i] = '0';
                } else {
                    ++all[i];
                    break;
                }
            }
            if (i < 0) all.insert(all.begin(), '1');
            std::size_t flen = frac.size();
            digits = all.substr(0, all.size() - flen);
            frac = flen > 0 ? all.substr(all.size() - flen) : "";
        }
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
    }

    std::string out;
    if (sgn(q) < 0) out += '-';
    out += digits;
    if (!frac.empty()) {
        out += '.';
        out += frac;
    }
    return out;
}

Rational rational_from_string(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw InputError("empty numeric literal");

    std::size_t slash = s.find('/');
    std::size_t dot = s.find('.');
    try {
        if (slash != std::string::npos) {
            if (dot != std::string::npos)
                throw InputError("malformed numeric literal '" + text + "'");
            Rational r(s);
            r.canonicalize();
            if (r.get_den() == 0)
                throw InputError("zero denominator in '" + text + "'");
            return r;
        }
        if (dot != std::string::npos) {
            std::string ip = s.substr(0, dot);
            std::string fp = s.substr(dot + 1);
            bool neg = false;
            if (!ip.empty() && (ip[0] == '+' || ip[0] == '-')) {
                neg = ip[0] == '-';
                ip = ip.substr(1);
            }
            if (ip.empty() && fp.empty())
                throw InputError("malformed numeric literal '" + text + "'");
            for (char c : ip + fp)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw InputError("malformed numeric literal '" + text + "'");
            mpz_class scaled((ip.empty() ? "0" : ip) + fp, 10);
            mpz_class den = 1;
            for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
            Rational r(scaled, den);
            r.canonicalize();
            return neg ? Rational(-r) : r;
        }
        Rational r(s, 10);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw InputError("malformed numeric literal '" + text + "'");
    }
}

}  // namespace polyfeat
