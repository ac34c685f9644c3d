/**
 * @file quadratic_field.hpp
 * @brief Exact arithmetic in real quadratic fields Q(sqrt(d)), d > 1 squarefree.
 *
 * An element is a + b*sqrt(d). Elements with b = 0 are plain rationals and
 * canonically carry d = 0, so rational constants combine with any field tag;
 * mixing two genuinely irrational tags (e.g. sqrt(2) with sqrt(3)) throws.
 * Signs are decided exactly by comparing a^2 against b^2 d.
 */
#pragma once

#include <stdexcept>
#include <string>

#include "rre/rational.hpp"

namespace rre {

struct FieldMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class QuadFieldElem {
public:
    QuadFieldElem() : a_(0), b_(0), d_(0) {}
    QuadFieldElem(long v) : a_(v), b_(0), d_(0) {}          // NOLINT(google-explicit-constructor)
    QuadFieldElem(const Rational& v) : a_(v), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
    QuadFieldElem(Rational a, Rational b, unsigned d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (b_ == 0) {
            d_ = 0;
        } else {
            if (d_ < 2) throw std::invalid_argument("QuadFieldElem: d must be > 1 when b != 0");
            if (!is_squarefree_int(d_)) throw std::invalid_argument("QuadFieldElem: d must be squarefree");
        }
    }

    static QuadFieldElem sqrt_d(unsigned d) { return QuadFieldElem(Rational(0), Rational(1), d); }

    const Rational& rat_part() const { return a_; }
    const Rational& quad_part() const { return b_; }
    unsigned field_tag() const { return d_; }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    /// Rational value; throws if the element is irrational.
    const Rational& as_rational() const {
        if (!is_rational()) throw std::domain_error("QuadFieldElem: not rational");
        return a_;
    }

    QuadFieldElem conj() const { return QuadFieldElem(a_, -b_, d_); }

    /// Field norm a^2 - d b^2 (rational; zero only for the zero element).
    Rational norm() const { return a_ * a_ - Rational(static_cast<long>(d_)) * b_ * b_; }

    friend QuadFieldElem operator+(const QuadFieldElem& x, const QuadFieldElem& y) {
        unsigned d = joined_tag(x, y);
        return QuadFieldElem(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadFieldElem operator-(const QuadFieldElem& x, const QuadFieldElem& y) {
        unsigned d = joined_tag(x, y);
        return QuadFieldElem(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    QuadFieldElem operator-() const { return QuadFieldElem(-a_, -b_, d_); }
    friend QuadFieldElem operator*(const QuadFieldElem& x, const QuadFieldElem& y) {
        unsigned d = joined_tag(x, y);
        Rational dd(static_cast<long>(d));
        return QuadFieldElem(x.a_ * y.a_ + dd * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadFieldElem operator/(const QuadFieldElem& x, const QuadFieldElem& y) {
        if (y.is_zero()) throw std::domain_error("QuadFieldElem: division by zero");
        unsigned d = joined_tag(x, y);
        (void)d;
        Rational n = y.norm();
        QuadFieldElem num = x * y.conj();
        return QuadFieldElem(num.a_ / n, num.b_ / n, num.d_);
    }

    QuadFieldElem& operator+=(const QuadFieldElem& y) { return *this = *this + y; }
    QuadFieldElem& operator-=(const QuadFieldElem& y) { return *this = *this - y; }
    QuadFieldElem& operator*=(const QuadFieldElem& y) { return *this = *this * y; }
    QuadFieldElem& operator/=(const QuadFieldElem& y) { return *this = *this / y; }

    friend bool operator==(const QuadFieldElem& x, const QuadFieldElem& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadFieldElem& x, const QuadFieldElem& y) { return !(x == y); }

    /// Exact sign under the real embedding sqrt(d) > 0.
    int sgn() const {
        if (b_ == 0) return sign(a_);
        if (a_ == 0) return sign(b_);
        int sa = sign(a_), sb = sign(b_);
        if (sa == sb) return sa;
        // opposite signs: compare |a| against |b| sqrt(d) via squares
        Rational lhs = a_ * a_;
        Rational rhs = b_ * b_ * Rational(static_cast<long>(d_));
        if (lhs == rhs) throw std::logic_error("QuadFieldElem: sqrt(d) rational, d not squarefree");
        return lhs > rhs ? sa : sb;
    }

    friend bool operator<(const QuadFieldElem& x, const QuadFieldElem& y) { return (x - y).sgn() < 0; }
    friend bool operator>(const QuadFieldElem& x, const QuadFieldElem& y) { return (x - y).sgn() > 0; }
    friend bool operator<=(const QuadFieldElem& x, const QuadFieldElem& y) { return (x - y).sgn() <= 0; }
    friend bool operator>=(const QuadFieldElem& x, const QuadFieldElem& y) { return (x - y).sgn() >= 0; }

    /// Rational upper bound on the absolute value.
    Rational abs_upper_bound() const {
        Rational r = a_ < 0 ? Rational(-a_) : a_;
        if (b_ != 0) {
            Int root_up = floor_nth_root(Int(d_), 2) + 1;
            Rational babs = b_ < 0 ? Rational(-b_) : b_;
            r += babs * Rational(root_up);
        }
        return r;
    }

    std::string str() const {
        if (b_ == 0) return rre::to_string(a_);
        std::string root = "sqrt(" + std::to_string(d_) + ")";
        std::string bs;
        if (b_ == 1)
            bs = root;
        else if (b_ == -1)
            bs = "-" + root;
        else
            bs = rre::to_string(b_) + "*" + root;
        if (a_ == 0) return bs;
        if (b_ > 0) return rre::to_string(a_) + " + " + (b_ == 1 ? root : rre::to_string(b_) + "*" + root);
        Rational nb = -b_;
        return rre::to_string(a_) + " - " + (nb == 1 ? root : rre::to_string(nb) + "*" + root);
    }

private:
    static unsigned joined_tag(const QuadFieldElem& x, const QuadFieldElem& y) {
        if (x.d_ == 0) return y.d_;
        if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
        throw FieldMismatch("QuadFieldElem: mixed field tags sqrt(" + std::to_string(x.d_) +
                            ") and sqrt(" + std::to_string(y.d_) + ")");
    }

    Rational a_, b_;
    unsigned d_;
};

inline int sign(const QuadFieldElem& x) { return x.sgn(); }

inline QuadFieldElem quad_conj(const QuadFieldElem& x) { return x.conj(); }

/**
 * Square root of x inside Q(sqrt(d)) if one exists there (x >= 0 required).
 * For rational x this admits both sqrt(s^2) and sqrt(d t^2); for irrational
 * x = a + b sqrt(d) it solves (u + v sqrt(d))^2 = x exactly.
 */
inline std::optional<QuadFieldElem> sqrt_in_field(const QuadFieldElem& x, unsigned d) {
    if (x.field_tag() != 0 && x.field_tag() != d)
        throw FieldMismatch("sqrt_in_field: element not in Q(sqrt(d))");
    if (x.is_zero()) return QuadFieldElem(0);
    if (x.sgn() < 0) return std::nullopt;
    if (x.is_rational()) {
        const Rational& q = x.as_rational();
        if (auto r = rational_sqrt(q)) return QuadFieldElem(*r);
        if (d >= 2) {
            if (auto t = rational_sqrt(q / Rational(static_cast<long>(d))))
                return QuadFieldElem(Rational(0), *t, d);
        }
        return std::nullopt;
    }
    // x = a + b sqrt(d), b != 0: need u^2 + d v^2 = a and 2uv = b.
    auto n = rational_sqrt(x.norm());
    if (!n) return std::nullopt;
    for (int s : {1, -1}) {
        Rational z = (x.rat_part() + (s > 0 ? *n : Rational(-*n))) / 2;
        auto u = rational_sqrt(z);
        if (u && *u != 0) {
            Rational v = x.quad_part() / (2 * *u);
            QuadFieldElem cand(*u, v, d);
            if (cand * cand == x) return cand.sgn() >= 0 ? cand : -cand;
        }
    }
    return std::nullopt;
}

inline bool is_square_in_field(const QuadFieldElem& x, unsigned d) {
    return sqrt_in_field(x, d).has_value();
}

}  // namespace rre
