#include "polyfeat/smt.hpp"

#include <cctype>
#include <memory>
#include <vector>

#include "polyfeat/errors.hpp"

namespace polyfeat {

namespace {

struct Sexp {
    // Leaf if children is empty and atom is set; list otherwise.
    std::string atom;
    bool is_atom = false;
    std::vector<Sexp> children;
    int line = 1;
    int column = 1;
};

class SexpReader {
public:
    explicit SexpReader(const std::string& src) : src_(src) {}

    std::vector<Sexp> read_all() {
        std::vector<Sexp> out;
        skip_trivia();
        while (pos_ < src_.size()) {
            out.push_back(read());
            skip_trivia();
        }
        return out;
    }

private:
    Sexp read() {
        skip_trivia();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of input", line_, col_);
        if (src_[pos_] == '(') {
            Sexp list;
            list.line = line_;
            list.column = col_;
            bump();
            skip_trivia();
            while (pos_ < src_.size() && src_[pos_] != ')') {
                list.children.push_back(read());
                skip_trivia();
            }
            if (pos_ >= src_.size()) throw ParseError("missing ')'", list.line, list.column);
            bump();
            return list;
        }
        if (src_[pos_] == ')') throw ParseError("unexpected ')'", line_, col_);
        Sexp leaf;
        leaf.is_atom = true;
        leaf.line = line_;
        leaf.column = col_;
        if (src_[pos_] == '|') {
            bump();
            while (pos_ < src_.size() && src_[pos_] != '|') {
                leaf.atom += src_[pos_];
                bump();
            }
            if (pos_ >= src_.size())
                throw ParseError("unterminated quoted symbol", leaf.line, leaf.column);
            bump();
            return leaf;
        }
        if (src_[pos_] == '"') {
            bump();
            while (pos_ < src_.size()) {
                if (src_[pos_] == '"') {
                    if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '"') {
                        leaf.atom += '"';
                        bump();
                        bump();
                        continue;
                    }
                    break;
                }
                leaf.atom += src_[pos_];
                bump();
            }
            if (pos_ >= src_.size())
                throw ParseError("unterminated string literal", leaf.line, leaf.column);
            bump();
            return leaf;
        }
        while (pos_ < src_.size() && !std::isspace(static_cast<unsigned char>(src_[pos_])) &&
               src_[pos_] != '(' && src_[pos_] != ')' && src_[pos_] != ';') {
            leaf.atom += src_[pos_];
            bump();
        }
        return leaf;
    }

    void skip_trivia() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ';') {
                while (pos_ < src_.size() && src_[pos_] != '\n') bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

bool is_numeral(const std::string& s) {
    if (s.empty()) return false;
    bool digit = false, dot = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digit = true;
        } else if (c == '.' && !dot) {
            dot = true;
        } else {
            return false;
        }
    }
    return digit;
}

class SmtExtractor {
public:
    explicit SmtExtractor(const std::string& text) : forms_(SexpReader(text).read_all()) {}

    ProblemInstance extract() {
        for (const Sexp& form : forms_) command(form);
        materialize_pending();
        if (names_.empty()) throw InputError("script declares no real constants");
        if (atom_polys_.empty()) throw InputError("no polynomial atoms found");
        VariableSet vars(names_);
        return ProblemInstance(std::move(vars), std::move(atom_polys_));
    }

private:
    void command(const Sexp& form) {
        if (form.is_atom || form.children.empty() || !form.children[0].is_atom)
            throw ParseError("expected a command", form.line, form.column);
        const std::string& head = form.children[0].atom;
        if (head == "set-logic" || head == "set-info" || head == "set-option" ||
            head == "check-sat" || head == "exit" || head == "get-model" ||
            head == "get-assignment" || head == "echo") {
            return;
        }
        if (head == "declare-const") {
            if (form.children.size() != 3 || !form.children[1].is_atom)
                throw ParseError("malformed declare-const", form.line, form.column);
            declare(form.children[1].atom, form.children[2], form);
            return;
        }
        if (head == "declare-fun") {
            if (form.children.size() != 4 || !form.children[1].is_atom)
                throw ParseError("malformed declare-fun", form.line, form.column);
            if (form.children[2].is_atom || !form.children[2].children.empty())
                throw ParseError("unsupported operator: function declarations with arguments",
                                 form.line, form.column);
            declare(form.children[1].atom, form.children[3], form);
            return;
        }
        if (head == "assert") {
            if (form.children.size() != 2)
                throw ParseError("malformed assert", form.line, form.column);
            formula(form.children[1]);
            return;
        }
        throw ParseError("unsupported operator: " + head, form.line, form.column);
    }

    void declare(const std::string& name, const Sexp& sort, const Sexp& form) {
        if (!sort.is_atom || sort.atom != "Real")
            throw ParseError("unsupported sort in declaration of '" + name + "'", form.line,
                             form.column);
        for (const auto& n : names_)
            if (n == name)
                throw ParseError("duplicate declaration of '" + name + "'", form.line,
                                 form.column);
        names_.push_back(name);
    }

    void formula(const Sexp& f) {
        if (f.is_atom) {
            if (f.atom == "true" || f.atom == "false") return;
            throw ParseError("unsupported operator: " + f.atom, f.line, f.column);
        }
        if (f.children.empty() || !f.children[0].is_atom)
            throw ParseError("malformed formula", f.line, f.column);
        const std::string& head = f.children[0].atom;
        if (head == "and" || head == "or") {
            for (std::size_t i = 1; i < f.children.size(); ++i) formula(f.children[i]);
            return;
        }
        if (head == "not") {
            if (f.children.size() != 2)
                throw ParseError("malformed not", f.line, f.column);
            formula(f.children[1]);
            return;
        }
        if (head == "=" || head == "<" || head == "<=" || head == ">" || head == ">=") {
            if (f.children.size() < 3)
                throw ParseError("relation needs at least two arguments", f.line, f.column);
            for (std::size_t i = 1; i + 1 < f.children.size(); ++i) {
                RawPoly lhs = term(f.children[i]);
                RawPoly rhs = term(f.children[i + 1]);
                add_atom_poly(lhs, rhs);
            }
            return;
        }
        throw ParseError("unsupported operator: " + head, f.line, f.column);
    }

    // Terms are collected before the variable set is final, so polynomials
    // are kept as raw term lists over a growing name table.
    struct RawTerm {
        Rational coeff;
        std::vector<std::pair<int, int>> powers;  // (name index, exponent)
    };
    using RawPoly = std::vector<RawTerm>;

    RawPoly term(const Sexp& t) {
        if (t.is_atom) {
            if (is_numeral(t.atom)) return {{rational_from_string(t.atom), {}}};
            int idx = name_index(t.atom);
            if (idx < 0)
                throw ParseError("unknown variable '" + t.atom + "'", t.line, t.column);
            return {{Rational(1), {{idx, 1}}}};
        }
        if (t.children.empty() || !t.children[0].is_atom)
            throw ParseError("malformed term", t.line, t.column);
        const std::string& head = t.children[0].atom;
        if (head == "+") {
            RawPoly acc;
            for (std::size_t i = 1; i < t.children.size(); ++i)
                append(acc, term(t.children[i]));
            return acc;
        }
        if (head == "-") {
            if (t.children.size() == 2) return negate(term(t.children[1]));
            if (t.children.size() < 3)
                throw ParseError("malformed -", t.line, t.column);
            RawPoly acc = term(t.children[1]);
            for (std::size_t i = 2; i < t.children.size(); ++i)
                append(acc, negate(term(t.children[i])));
            return acc;
        }
        if (head == "*") {
            RawPoly acc = {{Rational(1), {}}};
            for (std::size_t i = 1; i < t.children.size(); ++i)
                acc = multiply(acc, term(t.children[i]));
            return acc;
        }
        if (head == "/") {
            // Only constant rationals: (/ 3 2). Division by terms with
            // variables is outside the fragment.
            if (t.children.size() == 3 && t.children[1].is_atom && t.children[2].is_atom &&
                is_numeral(t.children[1].atom) && is_numeral(t.children[2].atom)) {
                Rational n = rational_from_string(t.children[1].atom);
                Rational d = rational_from_string(t.children[2].atom);
                if (d == 0) throw ParseError("division by zero", t.line, t.column);
                return {{n / d, {}}};
            }
            throw ParseError("unsupported operator: /", t.line, t.column);
        }
        throw ParseError("unsupported operator: " + head, t.line, t.column);
    }

    static RawPoly negate(RawPoly p) {
        for (auto& t : p) t.coeff = -t.coeff;
        return p;
    }

    static void append(RawPoly& acc, const RawPoly& more) {
        acc.insert(acc.end(), more.begin(), more.end());
    }

    static RawPoly multiply(const RawPoly& a, const RawPoly& b) {
        RawPoly out;
        for (const auto& x : a) {
            for (const auto& y : b) {
                RawTerm t;
                t.coeff = x.coeff * y.coeff;
                t.powers = x.powers;
                for (auto [v, e] : y.powers) {
                    bool found = false;
                    for (auto& [tv, te] : t.powers) {
                        if (tv == v) {
                            te += e;
                            found = true;
                            break;
                        }
                    }
                    if (!found) t.powers.emplace_back(v, e);
                }
                out.push_back(std::move(t));
            }
        }
        return out;
    }

    int name_index(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<int>(i);
        return -1;
    }

    void add_atom_poly(const RawPoly& lhs, const RawPoly& rhs) {
        // lhs sigma rhs  ->  (lhs - rhs) sigma 0
        RawPoly diff = lhs;
        append(diff, negate(rhs));
        pending_.push_back(diff);
    }

    std::vector<Sexp> forms_;
    std::vector<std::string> names_;
    // Raw atom polynomials, materialized once all declarations are known.
    std::vector<RawPoly> pending_;
    std::vector<Polynomial> atom_polys_;

    void materialize_pending() {
        int n = static_cast<int>(names_.size());
        for (const RawPoly& raw : pending_) {
            std::vector<Monomial> terms;
            for (const RawTerm& t : raw) {
                Monomial m;
                m.coeff = t.coeff;
                m.exponents.assign(n, 0);
                for (auto [v, e] : t.powers) m.exponents[v] += e;
                terms.push_back(std::move(m));
            }
            Polynomial p = Polynomial::from_monomials(n, std::move(terms));
            if (p.is_zero()) continue;  // trivially decided atom, e.g. (= x x)
            bool duplicate = false;
            for (const auto& q : atom_polys_)
                if (q == p) {
                    duplicate = true;
                    break;
                }
            if (!duplicate) atom_polys_.push_back(std::move(p));
        }
        pending_.clear();
    }
};

}  // namespace

ProblemInstance parse_problem_smt(const std::string& text) {
    SmtExtractor ex(text);
    return ex.extract();
}

}  // namespace polyfeat
