/**
 * @file interval.hpp
 * @brief Rational interval arithmetic with guaranteed enclosures for real
 *        n-th roots. Used to verify radical-tower witnesses; never floating
 *        point.
 */
#pragma once

#include "rre/quadratic_field.hpp"
#include "rre/rational.hpp"

namespace rre {

/// Thrown when a divisor enclosure straddles zero; refining may fix it.
struct IntervalDivByZero : std::domain_error {
    using std::domain_error::domain_error;
};

struct RatInterval {
    Rational lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("RatInterval: lo > hi");
    }
    static RatInterval point(const Rational& v) { return RatInterval(v, v); }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool overlaps(const RatInterval& o) const { return !(hi < o.lo || o.hi < lo); }

    friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
        return {a.lo - b.hi, a.hi - b.lo};
    }
    friend RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
        Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
        Rational mn = c[0], mx = c[0];
        for (int i = 1; i < 4; ++i) {
            if (c[i] < mn) mn = c[i];
            if (c[i] > mx) mx = c[i];
        }
        return {mn, mx};
    }
    friend RatInterval operator/(const RatInterval& a, const RatInterval& b) {
        if (b.contains_zero()) throw IntervalDivByZero("RatInterval: division by interval containing 0");
        RatInterval inv(Rational(1) / b.hi, Rational(1) / b.lo);
        return a * inv;
    }
};

/// Lower rational bound on x^(1/n) with error < 2^-prec_bits (x >= 0).
inline Rational nth_root_lower(const Rational& x, unsigned n, unsigned prec_bits) {
    if (x < 0) throw std::domain_error("nth_root_lower: negative radicand");
    Int s = Int(1) << prec_bits;
    // floor((x * s^n)^(1/n)) / s <= x^(1/n)
    Int scaled = numerator(x) * int_pow(s, n) / denominator(x);  // floor
    return Rational(floor_nth_root(scaled, n), s);
}

/// Upper rational bound on x^(1/n) with error < 2^-prec_bits (x >= 0).
inline Rational nth_root_upper(const Rational& x, unsigned n, unsigned prec_bits) {
    if (x < 0) throw std::domain_error("nth_root_upper: negative radicand");
    Int s = Int(1) << prec_bits;
    Int num = numerator(x) * int_pow(s, n);
    Int scaled = num / denominator(x);
    if (scaled * denominator(x) != num) ++scaled;  // ceiling
    Int root = floor_nth_root(scaled, n);
    if (int_pow(root, n) != scaled) ++root;  // ceiling of the root
    return Rational(root, s);
}

/**
 * Enclosure of the real n-th root of an interval. Even n requires a
 * nonnegative interval; odd n is handled on both signs.
 */
inline RatInterval nth_root_interval(const RatInterval& x, unsigned n, unsigned prec_bits) {
    if (n == 0) throw std::domain_error("nth_root_interval: n = 0");
    if (n % 2 == 0) {
        if (x.lo < 0) throw std::domain_error("nth_root_interval: even root of a negative interval");
        return {nth_root_lower(x.lo, n, prec_bits), nth_root_upper(x.hi, n, prec_bits)};
    }
    auto signed_root_lower = [&](const Rational& v) {
        return v >= 0 ? nth_root_lower(v, n, prec_bits) : -nth_root_upper(-v, n, prec_bits);
    };
    auto signed_root_upper = [&](const Rational& v) {
        return v >= 0 ? nth_root_upper(v, n, prec_bits) : -nth_root_lower(-v, n, prec_bits);
    };
    return {signed_root_lower(x.lo), signed_root_upper(x.hi)};
}

/// Enclosure of a + b*sqrt(d) at the given precision.
inline RatInterval quad_interval(const QuadFieldElem& v, unsigned prec_bits) {
    if (v.is_rational()) return RatInterval::point(v.rat_part());
    Rational d(static_cast<long>(v.field_tag()));
    RatInterval root(nth_root_lower(d, 2, prec_bits), nth_root_upper(d, 2, prec_bits));
    return RatInterval::point(v.rat_part()) + RatInterval::point(v.quad_part()) * root;
}

}  // namespace rre
