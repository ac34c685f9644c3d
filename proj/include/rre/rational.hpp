/**
 * @file rational.hpp
 * @brief Exact big-integer and big-rational scalars plus integer root
 *        extraction and small-prime utilities.
 *
 * Rationals are kept canonical by the backend: gcd(|num|, den) = 1 and
 * den > 0, so equality is structural. No floating point anywhere.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rre {

namespace mp = boost::multiprecision;

// et_off: every operator returns a materialized value (no expression
// templates), which keeps generic code over scalars simple.
using Int = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::backends::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

inline int sign(const Int& x) { return x.sign(); }
inline int sign(const Rational& x) { return x.sign(); }

inline Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int int_pow(Int base, unsigned long e) {
    Int r{1};
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (base == 0) throw std::domain_error("rat_pow: zero to negative power");
        return Rational(int_pow(denominator(base), static_cast<unsigned long>(-e)),
                        int_pow(numerator(base), static_cast<unsigned long>(-e)));
    }
    return Rational(int_pow(numerator(base), static_cast<unsigned long>(e)),
                    int_pow(denominator(base), static_cast<unsigned long>(e)));
}

/// Largest t with t^n <= x. Requires x >= 0, n >= 1.
inline Int floor_nth_root(const Int& x, unsigned n) {
    if (x < 0) throw std::domain_error("floor_nth_root: negative radicand");
    if (n == 0) throw std::domain_error("floor_nth_root: n = 0");
    if (x == 0 || x == 1 || n == 1) return x;
    // binary search over bit length
    unsigned bits = static_cast<unsigned>(mp::msb(x)) + 1;
    Int hi = Int(1) << (bits / n + 1);
    Int lo{0};
    while (lo < hi - 1) {
        Int mid = (lo + hi) / 2;
        if (int_pow(mid, n) <= x)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

/// Exact integer n-th root, if x is a perfect n-th power (x >= 0).
inline std::optional<Int> exact_nth_root(const Int& x, unsigned n) {
    Int t = floor_nth_root(x, n);
    if (int_pow(t, n) == x) return t;
    return std::nullopt;
}

/**
 * Exact p-th root in Q. Returns r with r^p = a when one exists.
 * For even p, a must be >= 0 and the nonnegative root is returned.
 * Total: never throws on mathematical input.
 */
inline std::optional<Rational> is_pth_power(const Rational& a, unsigned p) {
    if (p == 0) return std::nullopt;
    if (a == 0) return Rational(0);
    const bool neg = a < 0;
    if (neg && p % 2 == 0) return std::nullopt;
    auto rn = exact_nth_root(iabs(numerator(a)), p);
    if (!rn) return std::nullopt;
    auto rd = exact_nth_root(denominator(a), p);
    if (!rd) return std::nullopt;
    Rational r(*rn, *rd);
    return neg ? Rational(-r) : r;
}

inline std::optional<Rational> rational_sqrt(const Rational& a) { return is_pth_power(a, 2); }

inline bool is_rational_square(const Rational& a) { return rational_sqrt(a).has_value(); }

inline std::vector<unsigned long> primes_up_to(unsigned long n) {
    std::vector<bool> comp(n + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= n; ++i) {
        if (!comp[i]) {
            out.push_back(i);
            for (unsigned long j = 2 * i; j <= n; j += i) comp[j] = true;
        }
    }
    return out;
}

inline bool is_small_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    return mp::miller_rabin_test(n, 32);
}

inline bool is_squarefree_int(unsigned long n) {
    if (n == 0) return false;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % (d * d) == 0) return false;
    }
    return true;
}

/**
 * Prime factors of |x| found by trial division up to `bound`, plus the
 * remaining cofactor if it is a (probable) prime. Returns nullopt when a
 * composite cofactor above the bound survives, i.e. the factorization is
 * incomplete.
 */
inline std::optional<std::vector<Int>> prime_factors(Int x, unsigned long bound = 1000000) {
    x = iabs(x);
    std::vector<Int> out;
    if (x <= 1) return out;
    for (unsigned long d = 2; d <= bound && Int(d) * d <= x; ++d) {
        if (x % d == 0) {
            out.push_back(Int(d));
            while (x % d == 0) x /= d;
        }
    }
    if (x > 1) {
        if (Int(bound) * bound >= x || is_probable_prime(x))
            out.push_back(x);
        else
            return std::nullopt;
    }
    return out;
}

/// All positive divisors of |x| (requires complete factorization; nullopt otherwise).
inline std::optional<std::vector<Int>> divisors(const Int& x) {
    if (x == 0) return std::nullopt;
    Int n = iabs(x);
    auto pf = prime_factors(n);
    if (!pf) return std::nullopt;
    std::vector<Int> out{Int(1)};
    for (const Int& p : *pf) {
        unsigned mult = 0;
        Int m = n;
        while (m % p == 0) {
            m /= p;
            ++mult;
        }
        size_t base = out.size();
        Int pk{1};
        for (unsigned e = 1; e <= mult; ++e) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

}  // namespace rre
