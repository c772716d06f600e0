#include "polyfeat/parse.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "polyfeat/errors.hpp"

namespace polyfeat {

namespace {

enum class TokKind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    TokKind kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    Lexer(const std::string& src, int base_line) : src_(src), line_(base_line) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= src_.size()) return {TokKind::End, "", line, col};
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return lex_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return lex_ident();
        ++pos_;
        ++col_;
        switch (c) {
            case '+': return {TokKind::Plus, "+", line, col};
            case '-': return {TokKind::Minus, "-", line, col};
            case '*': return {TokKind::Star, "*", line, col};
            case '^': return {TokKind::Caret, "^", line, col};
            case '(': return {TokKind::LParen, "(", line, col};
            case ')': return {TokKind::RParen, ")", line, col};
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
    }

private:
    void skip_ws() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
            } else {
                break;
            }
        }
    }

    Token lex_number() {
        int line = line_, col = col_;
        std::string digits = take_digits();
        // "a/b" with integer numerator and denominator is a rational literal;
        // '/' is not an operator anywhere else.
        if (pos_ < src_.size() && src_[pos_] == '/') {
            std::size_t save_pos = pos_;
            int save_col = col_;
            ++pos_;
            ++col_;
            if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                std::string den = take_digits();
                return {TokKind::Number, digits + "/" + den, line, col};
            }
            pos_ = save_pos;
            col_ = save_col;
        }
        return {TokKind::Number, digits, line, col};
    }

    std::string take_digits() {
        std::string out;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            out += src_[pos_++];
            ++col_;
        }
        return out;
    }

    Token lex_ident() {
        int line = line_, col = col_;
        std::string out;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            out += src_[pos_++];
            ++col_;
        }
        return {TokKind::Ident, out, line, col};
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_;
    int col_ = 1;
};

// expression := term (('+'|'-') term)*
// term       := factor ('*' factor)*
// factor     := ('+'|'-')* base ('^' INTEGER)?
// base       := NUMBER | IDENT | '(' expression ')'
class PolyParser {
public:
    PolyParser(const std::string& src, const VariableSet& vars, int base_line)
        : lexer_(src, base_line), vars_(vars) {
        advance();
    }

    Polynomial parse() {
        Polynomial p = expression();
        expect(TokKind::End, "end of input");
        return p;
    }

private:
    Polynomial expression() {
        Polynomial acc = term();
        while (cur_.kind == TokKind::Plus || cur_.kind == TokKind::Minus) {
            bool minus = cur_.kind == TokKind::Minus;
            advance();
            Polynomial rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (cur_.kind == TokKind::Star) {
            advance();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        bool negate = false;
        while (cur_.kind == TokKind::Plus || cur_.kind == TokKind::Minus) {
            if (cur_.kind == TokKind::Minus) negate = !negate;
            advance();
        }
        Polynomial b = base();
        if (cur_.kind == TokKind::Caret) {
            Token caret = cur_;
            advance();
            if (cur_.kind != TokKind::Number || cur_.text.find('/') != std::string::npos)
                throw ParseError("exponent must be a non-negative integer", caret.line,
                                 caret.column);
            long e;
            try {
                e = std::stol(cur_.text);
            } catch (const std::exception&) {
                throw ParseError("exponent out of range", cur_.line, cur_.column);
            }
            advance();
            b = b.pow(static_cast<int>(e));
        }
        return negate ? -b : b;
    }

    Polynomial base() {
        if (cur_.kind == TokKind::Number) {
            Rational c = rational_from_string(cur_.text);
            advance();
            return Polynomial::constant(vars_.size(), std::move(c));
        }
        if (cur_.kind == TokKind::Ident) {
            auto idx = vars_.index_of(cur_.text);
            if (!idx)
                throw ParseError("unknown variable '" + cur_.text + "'", cur_.line, cur_.column);
            advance();
            return Polynomial::variable(vars_.size(), *idx);
        }
        if (cur_.kind == TokKind::LParen) {
            advance();
            Polynomial p = expression();
            expect(TokKind::RParen, "')'");
            return p;
        }
        throw ParseError("expected a number, variable or '('", cur_.line, cur_.column);
    }

    void expect(TokKind kind, const std::string& what) {
        if (cur_.kind != kind)
            throw ParseError("expected " + what, cur_.line, cur_.column);
        advance();
    }

    void advance() { cur_ = lexer_.next(); }

    Lexer lexer_;
    const VariableSet& vars_;
    Token cur_;
};

std::string strip_comment(const std::string& line) {
    std::size_t h = line.find('#');
    return h == std::string::npos ? line : line.substr(0, h);
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const VariableSet& vars) {
    return PolyParser(text, vars, 1).parse();
}

ProblemInstance parse_problem_native(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::optional<VariableSet> vars;
    std::vector<Polynomial> polys;

    while (std::getline(in, line)) {
        ++lineno;
        std::string body = trim(strip_comment(line));
        if (body.empty()) continue;
        if (!vars) {
            if (body.rfind("vars:", 0) != 0)
                throw ParseError("expected a 'vars:' declaration", lineno, 1);
            std::vector<std::string> names;
            std::string rest = body.substr(5);
            std::size_t start = 0;
            while (start <= rest.size()) {
                std::size_t comma = rest.find(',', start);
                std::string name = trim(comma == std::string::npos
                                            ? rest.substr(start)
                                            : rest.substr(start, comma - start));
                if (name.empty())
                    throw ParseError("empty variable name in 'vars:' line", lineno, 1);
                names.push_back(name);
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            vars.emplace(std::move(names));
            continue;
        }
        // Parse the comment-stripped but untrimmed line so column numbers
        // match the file.
        Polynomial p = PolyParser(strip_comment(line), *vars, lineno).parse();
        if (p.is_zero())
            throw ParseError("polynomial is identically zero", lineno, 1);
        polys.push_back(std::move(p));
    }

    if (!vars) throw InputError("problem file has no 'vars:' declaration");
    if (polys.empty()) throw InputError("problem file lists no polynomials");
    return ProblemInstance(std::move(*vars), std::move(polys));
}

}  // namespace polyfeat
