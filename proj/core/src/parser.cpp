#include <cctype>
#include <string_view>

#include "affdyn/errors.hpp"
#include "affdyn/polynomial.hpp"

namespace affdyn {

namespace {

class PolyParser {
public:
    PolyParser(std::string_view src, int n, const Int& big_n)
        : src_(src), n_(n), big_n_(big_n) {}

    Polynomial run() {
        Polynomial out = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) {
            throw ParseError("unexpected character '" + std::string(1, src_[pos_]) + "'", pos_);
        }
        return out;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_digit() {
        skip_ws();
        return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
    }

    Int parse_natural(const char* what) {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError(std::string("expected ") + what, start);
        return Int(std::string(src_.substr(start, pos_ - start)));
    }

    unsigned parse_exponent() {
        skip_ws();
        const std::size_t start = pos_;
        Int e = parse_natural("exponent");
        if (e > 1'000'000'000) throw ParseError("exponent too large", start);
        return static_cast<unsigned>(e);
    }

    // expr := term (('+'|'-') term)*
    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        while (true) {
            if (accept('+')) {
                acc = acc + parse_term();
            } else if (accept('-')) {
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    // term := factor ('*' factor)*
    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (accept('*')) acc = acc * parse_factor();
        return acc;
    }

    // factor := atom ('^' natural)?
    Polynomial parse_factor() {
        Polynomial base = parse_atom();
        if (accept('^')) {
            unsigned e = parse_exponent();
            Polynomial acc = Polynomial::constant(n_, 1);
            // small exponents dominate; square-and-multiply keeps the rest sane
            Polynomial sq = base;
            while (e > 0) {
                if (e & 1u) acc = acc * sq;
                e >>= 1u;
                if (e) sq = sq * sq;
            }
            return acc;
        }
        return base;
    }

    // atom := integer | rational | var | '(' expr ')' | '-' factor
    Polynomial parse_atom() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = parse_expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -parse_factor();
        }
        if (c == 'x') {
            const std::size_t start = pos_;
            ++pos_;
            if (!at_digit()) throw ParseError("expected variable index after 'x'", pos_);
            Int idx = parse_natural("variable index");
            if (idx < 1 || idx > n_) {
                throw ParseError("unknown variable x" + idx.str() + " (dimension is " +
                                     std::to_string(n_) + ")",
                                 start);
            }
            return Polynomial::variable(n_, static_cast<int>(idx));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            Int num = parse_natural("integer");
            if (accept('/')) {
                Int den = parse_natural("denominator");
                if (den == 0) throw ParseError("zero denominator", start);
                Rat value(num, den);
                if (!divides_power(denominator(value), big_n_)) {
                    throw ParseError("rational literal with denominator not dividing " +
                                         big_n_.str() + "^inf",
                                     start);
                }
                return Polynomial::constant(n_, value);
            }
            return Polynomial::constant(n_, Rat(num));
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int n_;
    Int big_n_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view src, int n, const Int& big_n) {
    if (n < 0) throw std::invalid_argument("parse_polynomial: negative dimension");
    return PolyParser(src, n, big_n).run();
}

}  // namespace affdyn
