/**
 * @file poly_text.hpp
 * @brief Text format for polynomials: parse "x^3 - 3x + 3", "x^3 - 3x + (3 - sqrt(3))",
 *        print in canonical descending-power form.
 *
 * Grammar (recursive descent):
 *   expr   := ['-'] term (('+'|'-') term)*
 *   term   := factor (('*' | '/' | juxtaposition) factor)*
 *   factor := base ['^' uint]
 *   base   := number | 'x' | 'sqrt' '(' uint ')' | '(' expr ')'
 *   number := digits ['/' digits]
 * '/' requires a constant divisor. Parse errors carry the byte position.
 */
#pragma once

#include <cctype>
#include <optional>
#include <string>

#include "rre/polynomial.hpp"

namespace rre {

struct PolyParseError : std::runtime_error {
    PolyParseError(size_t pos, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what), position(pos) {}
    size_t position;
};

namespace detail {

class PolyParser {
public:
    explicit PolyParser(const std::string& text) : s_(text) {}

    Polynomial<QuadFieldElem> parse() {
        skip_ws();
        if (eof()) throw PolyParseError(pos_, "empty polynomial");
        auto p = parse_expr();
        skip_ws();
        if (!eof()) throw PolyParseError(pos_, "unexpected trailing input");
        return p;
    }

private:
    using P = Polynomial<QuadFieldElem>;

    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return eof() ? '\0' : s_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    P parse_expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        P acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                P t = parse_term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    P parse_term() {
        P acc = parse_factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*' || c == '/') {
                ++pos_;
                size_t at = pos_;
                P f = parse_factor();
                if (c == '*') {
                    acc = acc * f;
                } else {
                    if (f.degree() > 0) throw PolyParseError(at, "division by non-constant");
                    if (f.is_zero()) throw PolyParseError(at, "division by zero");
                    acc = acc * (QuadFieldElem(1) / f.coeff(0));
                }
            } else if (starts_base()) {
                acc = acc * parse_factor();  // juxtaposition, e.g. "3x"
            } else {
                return acc;
            }
        }
    }

    bool starts_base() {
        skip_ws();
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'x' || c == 'X' || c == 's';
    }

    P parse_factor() {
        P b = parse_base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            size_t at = pos_;
            unsigned long e = parse_uint();
            if (e > 64) throw PolyParseError(at, "exponent too large");
            b = b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    P parse_base() {
        skip_ws();
        size_t at = pos_;
        char c = peek();
        if (c == '(') {
            ++pos_;
            P inner = parse_expr();
            skip_ws();
            if (peek() != ')') throw PolyParseError(pos_, "expected ')'");
            ++pos_;
            return inner;
        }
        if (c == 'x' || c == 'X') {
            ++pos_;
            return P::x();
        }
        if (s_.compare(pos_, 4, "sqrt") == 0) {
            pos_ += 4;
            skip_ws();
            if (peek() != '(') throw PolyParseError(pos_, "expected '(' after sqrt");
            ++pos_;
            skip_ws();
            unsigned long d = parse_uint();
            skip_ws();
            if (peek() != ')') throw PolyParseError(pos_, "expected ')'");
            ++pos_;
            if (d < 2 || !is_squarefree_int(d))
                throw PolyParseError(at, "sqrt argument must be squarefree and > 1");
            return P::constant(QuadFieldElem::sqrt_d(static_cast<unsigned>(d)));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = parse_int();
            if (peek() == '/') {
                size_t slash = pos_;
                ++pos_;
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    throw PolyParseError(slash + 1, "expected denominator");
                Int den = parse_int();
                if (den == 0) throw PolyParseError(slash + 1, "zero denominator");
                return P::constant(QuadFieldElem(Rational(num, den)));
            }
            return P::constant(QuadFieldElem(Rational(num)));
        }
        throw PolyParseError(at, "expected number, 'x', 'sqrt(', or '('");
    }

    Int parse_int() {
        size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw PolyParseError(start, "expected digits");
        return Int(s_.substr(start, pos_ - start));
    }

    unsigned long parse_uint() {
        Int v = parse_int();
        if (v > 1000000) throw PolyParseError(pos_, "integer too large here");
        return v.convert_to<unsigned long>();
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace detail

/**
 * Parse over Q(sqrt(d)). When expect_d is set, any sqrt() in the text must
 * use that d; otherwise d is inferred (0 if absent).
 */
inline Polynomial<QuadFieldElem> parse_poly_quad(const std::string& text,
                                                 std::optional<unsigned> expect_d = std::nullopt) {
    Polynomial<QuadFieldElem> p = detail::PolyParser(text).parse();
    unsigned seen = 0;
    for (const auto& c : p.coeffs())
        if (c.field_tag() != 0) seen = c.field_tag();
    if (expect_d && seen != 0 && seen != *expect_d)
        throw PolyParseError(0, "polynomial uses sqrt(" + std::to_string(seen) +
                                    ") but ground field is Q(sqrt(" + std::to_string(*expect_d) + "))");
    return p;
}

/// Parse over Q; rejects any sqrt() term.
inline Polynomial<Rational> parse_poly_q(const std::string& text) {
    auto p = parse_poly_quad(text);
    auto r = to_rational_poly(p);
    if (!r) throw PolyParseError(0, "polynomial has irrational coefficients; pass a ground field");
    return *r;
}

namespace detail {

inline bool coeff_is_one(const Rational& c) { return c == 1; }
inline bool coeff_is_one(const QuadFieldElem& c) { return c == QuadFieldElem(1); }
inline bool coeff_is_neg_one(const Rational& c) { return c == -1; }
inline bool coeff_is_neg_one(const QuadFieldElem& c) { return c == QuadFieldElem(-1); }
inline bool coeff_neg(const Rational& c) { return c < 0; }
inline bool coeff_neg(const QuadFieldElem& c) { return c.sgn() < 0; }
inline Rational coeff_abs(const Rational& c) { return c < 0 ? Rational(-c) : c; }
inline QuadFieldElem coeff_abs(const QuadFieldElem& c) { return coeff_neg(c) ? -c : c; }
inline std::string coeff_str(const Rational& c) { return to_string(c); }
inline std::string coeff_str(const QuadFieldElem& c) {
    if (c.is_rational()) return to_string(c.rat_part());
    return "(" + c.str() + ")";
}

}  // namespace detail

/// Canonical text: descending powers, e.g. "x^3 - 6x + 2".
template <class K>
std::string poly_to_text(const Polynomial<K>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (long i = f.degree(); i >= 0; --i) {
        K c = f.coeff(static_cast<size_t>(i));
        if (scalar_is_zero(c)) continue;
        bool neg = detail::coeff_neg(c);
        K a = detail::coeff_abs(c);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string cs = detail::coeff_str(a);
        if (i == 0) {
            out += cs;
        } else {
            if (!detail::coeff_is_one(a)) out += cs;
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace rre
