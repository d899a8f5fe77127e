#include "fewnom/expr.hpp"

#include <cctype>
#include <cstdlib>
#include <string>
#include <vector>

#include "fewnom/errors.hpp"

namespace fewnom {

namespace {

constexpr long kMaxExponent = 1000000;

// Recursive-descent parser producing a BivarPoly; the univariate entry point
// restricts the alphabet to x and forbids negative exponents, then converts.
class Parser {
public:
    Parser(const std::string& text, bool laurent)
        : text_(text), laurent_(laurent) {}

    BivarPoly run() {
        skip_space();
        if (pos_ >= text_.size())
            throw SyntaxError("empty expression", 0);
        BivarPoly p = parse_expr();
        skip_space();
        if (pos_ < text_.size())
            throw SyntaxError("unexpected character", pos_);
        return p;
    }

private:
    const std::string& text_;
    bool laurent_;
    std::size_t pos_ = 0;

    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace((unsigned char)text_[pos_]))
            ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    BivarPoly parse_expr() {
        BivarPoly acc;
        bool negate = false;
        char c = peek();
        if (c == '+' || c == '-') {
            negate = (c == '-');
            ++pos_;
        }
        acc = parse_term();
        if (negate) acc = -acc;
        while (true) {
            c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            BivarPoly t = parse_term();
            acc = (c == '+') ? acc + t : acc - t;
        }
        return acc;
    }

    BivarPoly parse_term() {
        BivarPoly acc = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * parse_factor();
            } else if (std::isalpha((unsigned char)c) || c == '(') {
                acc = acc * parse_factor();  // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    BivarPoly parse_factor() {
        if (peek() == '-') {
            ++pos_;
            return -parse_factor();
        }
        BivarPoly base = parse_base();
        if (peek() != '^') return base;
        std::size_t caret = pos_;
        ++pos_;
        long e = parse_exponent();
        return power(base, e, caret);
    }

    BivarPoly parse_base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            BivarPoly inner = parse_expr();
            if (peek() != ')')
                throw SyntaxError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit((unsigned char)c)) {
            return BivarPoly({BivarTerm{0, 0, parse_integer()}});
        }
        if (std::isalpha((unsigned char)c)) {
            std::size_t at = pos_;
            ++pos_;
            if (c == 'x') return BivarPoly({BivarTerm{1, 0, Int(1)}});
            if (c == 'y' && laurent_) return BivarPoly({BivarTerm{0, 1, Int(1)}});
            throw UnknownVariable(std::string(1, c), at);
        }
        throw SyntaxError("expected a number, variable, or '('", pos_);
    }

    Int parse_integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_]))
            ++pos_;
        return Int(text_.substr(start, pos_ - start));
    }

    long parse_exponent() {
        bool negative = false;
        char c = peek();
        std::size_t sign_at = pos_;
        if (c == '-' || c == '+') {
            negative = (c == '-');
            ++pos_;
        }
        if (!std::isdigit((unsigned char)peek()))
            throw SyntaxError("expected an exponent", pos_);
        if (negative && !laurent_)
            throw SyntaxError("negative exponent in a plain polynomial",
                              sign_at);
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_]))
            ++pos_;
        std::string digits = text_.substr(start, pos_ - start);
        if (digits.size() > 7)
            throw SyntaxError("exponent out of range", start);
        long e = std::strtol(digits.c_str(), nullptr, 10);
        if (e > kMaxExponent)
            throw SyntaxError("exponent out of range", start);
        return negative ? -e : e;
    }

    BivarPoly power(const BivarPoly& base, long e, std::size_t caret) {
        if (e < 0) {
            // Only a monomial with unit coefficient has a Laurent inverse.
            if (base.terms().size() != 1 ||
                (base.terms()[0].c != 1 && base.terms()[0].c != -1))
                throw SyntaxError("negative power of a non-invertible base",
                                  caret);
            const BivarTerm& t = base.terms()[0];
            Int c = (t.c == -1 && e % 2 != 0) ? Int(-1) : Int(1);
            return BivarPoly({BivarTerm{t.xe * e, t.ye * e, c}});
        }
        BivarPoly result({BivarTerm{0, 0, Int(1)}});
        BivarPoly sq = base;
        unsigned long k = (unsigned long)e;
        while (k > 0) {
            if (k & 1) result = result * sq;
            k >>= 1;
            if (k > 0) sq = sq * sq;
        }
        return result;
    }
};

} // namespace

IntPoly parse_univariate(const std::string& text) {
    BivarPoly p = Parser(text, /*laurent=*/false).run();
    std::vector<SparseTerm> terms;
    terms.reserve(p.terms().size());
    for (const BivarTerm& t : p.terms())
        terms.push_back(SparseTerm{(std::size_t)t.xe, t.c});
    return from_sparse_terms(terms);
}

BivarPoly parse_bivariate(const std::string& text) {
    return Parser(text, /*laurent=*/true).run();
}

std::string render_univariate(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (long i = p.degree(); i >= 0; --i) {
        Int c = p.coeff((std::size_t)i);
        if (c == 0) continue;
        if (!s.empty()) {
            s += (c < 0) ? "-" : "+";
            if (c < 0) c = -c;
        } else if (c < 0) {
            s += "-";
            c = -c;
        }
        if (i == 0) {
            s += c.get_str();
        } else {
            if (c != 1) s += c.get_str() + "*";
            s += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return s;
}

std::string render_bivariate(const BivarPoly& p) { return to_string(p); }

} // namespace fewnom
