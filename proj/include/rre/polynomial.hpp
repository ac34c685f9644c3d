/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over an exact field (Q or Q(sqrt(d))).
 *
 * Coefficient index = degree; the leading coefficient is nonzero unless the
 * polynomial is zero (empty coefficient vector). All arithmetic is exact;
 * divmod and gcd are Euclidean over the coefficient field, gcd is monic.
 * Degrees in scope stay small (<= 20), so the dense form and a Sylvester
 * determinant resultant are plenty.
 */
#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rre/quadratic_field.hpp"
#include "rre/rational.hpp"

namespace rre {

inline bool scalar_is_zero(const Rational& x) { return x == 0; }
inline bool scalar_is_zero(const QuadFieldElem& x) { return x.is_zero(); }
inline Rational abs_upper(const Rational& x) { return x < 0 ? Rational(-x) : x; }
inline Rational abs_upper(const QuadFieldElem& x) { return x.abs_upper_bound(); }

template <class K>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(K v) { return Polynomial(std::vector<K>{std::move(v)}); }
    static Polynomial monomial(K coeff, size_t deg) {
        std::vector<K> c(deg + 1, K{});
        c[deg] = std::move(coeff);
        return Polynomial(std::move(c));
    }
    /// X^1 with unit coefficient.
    static Polynomial x() { return monomial(K(1), 1); }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }

    K coeff(size_t i) const { return i < c_.size() ? c_[i] : K{}; }
    const K& lc() const {
        if (c_.empty()) throw std::domain_error("Polynomial: leading coefficient of zero");
        return c_.back();
    }

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
        std::vector<K> c(std::max(f.c_.size(), g.c_.size()), K{});
        for (size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i) + g.coeff(i);
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& f, const Polynomial& g) {
        std::vector<K> c(std::max(f.c_.size(), g.c_.size()), K{});
        for (size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i) - g.coeff(i);
        return Polynomial(std::move(c));
    }
    Polynomial operator-() const {
        std::vector<K> c(c_);
        for (auto& v : c) v = -v;
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
        if (f.is_zero() || g.is_zero()) return Polynomial();
        std::vector<K> c(f.c_.size() + g.c_.size() - 1, K{});
        for (size_t i = 0; i < f.c_.size(); ++i)
            for (size_t j = 0; j < g.c_.size(); ++j) c[i + j] += f.c_[i] * g.c_[j];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& f, const K& s) {
        std::vector<K> c(f.c_);
        for (auto& v : c) v = v * s;
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const K& s, const Polynomial& f) { return f * s; }

    friend bool operator==(const Polynomial& f, const Polynomial& g) { return f.c_ == g.c_; }
    friend bool operator!=(const Polynomial& f, const Polynomial& g) { return !(f == g); }

    /// Euclidean division: returns (q, r) with *this = q*g + r, deg r < deg g.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& g) const {
        if (g.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
        Polynomial q, r = *this;
        q.c_.assign(c_.size(), K{});
        while (!r.is_zero() && r.degree() >= g.degree()) {
            size_t shift = static_cast<size_t>(r.degree() - g.degree());
            K factor = r.lc() / g.lc();
            q.c_[shift] = q.c_[shift] + factor;
            // r -= factor * X^shift * g
            for (size_t i = 0; i < g.c_.size(); ++i)
                r.c_[i + shift] = r.c_[i + shift] - factor * g.c_[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<K> c(c_.size() - 1, K{});
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * K(static_cast<long>(i));
        return Polynomial(std::move(c));
    }

    K eval(const K& x) const {
        K r{};
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) throw std::domain_error("Polynomial: monic of zero");
        K inv = K(1) / lc();
        return *this * inv;
    }

    /// f(X + q), via Horner over the polynomial ring.
    Polynomial shift_arg(const K& q) const {
        Polynomial xq({q, K(1)});
        Polynomial r;
        for (size_t i = c_.size(); i-- > 0;) r = r * xq + constant(c_[i]);
        return r;
    }

    /// f(s*X) for a nonzero scalar s.
    Polynomial scale_arg(const K& s) const {
        std::vector<K> c(c_);
        K pw = K(1);
        for (size_t i = 0; i < c.size(); ++i) {
            c[i] = c[i] * pw;
            pw = pw * s;
        }
        return Polynomial(std::move(c));
    }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(K(1));
        Polynomial b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

private:
    void trim() {
        while (!c_.empty() && scalar_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<K> c_;
};

template <class K>
bool divides(const Polynomial<K>& g, const Polynomial<K>& f) {
    if (g.is_zero()) return f.is_zero();
    return f.divmod(g).second.is_zero();
}

/// Monic gcd over the coefficient field.
template <class K>
Polynomial<K> poly_gcd(Polynomial<K> a, Polynomial<K> b) {
    while (!b.is_zero()) {
        Polynomial<K> r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

/// f / gcd(f, f'), monic: same distinct roots, all simple.
template <class K>
Polynomial<K> squarefree_part(const Polynomial<K>& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    if (f.degree() == 0) return f.monic();
    Polynomial<K> g = poly_gcd(f, f.derivative());
    return f.divmod(g).first.monic();
}

template <class K>
bool is_squarefree(const Polynomial<K>& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

/// Resultant via exact Gaussian elimination of the Sylvester matrix.
template <class K>
K resultant(const Polynomial<K>& f, const Polynomial<K>& g) {
    if (f.is_zero() || g.is_zero()) return K{};
    const size_t n = static_cast<size_t>(f.degree());
    const size_t m = static_cast<size_t>(g.degree());
    if (n == 0) {
        K r = K(1);
        for (size_t i = 0; i < m; ++i) r = r * f.coeff(0);
        return r;
    }
    if (m == 0) {
        K r = K(1);
        for (size_t i = 0; i < n; ++i) r = r * g.coeff(0);
        return r;
    }
    const size_t dim = n + m;
    std::vector<std::vector<K>> a(dim, std::vector<K>(dim, K{}));
    for (size_t row = 0; row < m; ++row)
        for (size_t j = 0; j <= n; ++j) a[row][row + j] = f.coeff(n - j);
    for (size_t row = 0; row < n; ++row)
        for (size_t j = 0; j <= m; ++j) a[m + row][row + j] = g.coeff(m - j);

    K det = K(1);
    for (size_t col = 0; col < dim; ++col) {
        size_t piv = col;
        while (piv < dim && scalar_is_zero(a[piv][col])) ++piv;
        if (piv == dim) return K{};
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det = det * a[col][col];
        K inv = K(1) / a[col][col];
        for (size_t r = col + 1; r < dim; ++r) {
            if (scalar_is_zero(a[r][col])) continue;
            K factor = a[r][col] * inv;
            for (size_t c = col; c < dim; ++c) a[r][c] = a[r][c] - factor * a[col][c];
        }
    }
    return det;
}

/**
 * Discriminant (-1)^{n(n-1)/2} Res(f, f') / lc(f). With this convention the
 * depressed cubic X^3 + bX + c comes out as -4b^3 - 27c^2 exactly.
 */
template <class K>
K discriminant(const Polynomial<K>& f) {
    if (f.degree() < 2) throw std::domain_error("discriminant: degree < 2");
    const long n = f.degree();
    K res = resultant(f, f.derivative());
    K disc = res / f.lc();
    if ((n * (n - 1) / 2) % 2 != 0) disc = -disc;
    return disc;
}

/// Cauchy bound: every real root has |root| < 1 + max |a_i| / |a_n|.
template <class K>
Rational cauchy_root_bound(const Polynomial<K>& f) {
    if (f.is_zero()) throw std::domain_error("cauchy_root_bound: zero polynomial");
    Polynomial<K> m = f.monic();
    Rational mx(0);
    for (long i = 0; i < m.degree(); ++i) mx = std::max(mx, abs_upper(m.coeff(static_cast<size_t>(i))));
    return mx + 1;
}

inline Polynomial<QuadFieldElem> to_quad_poly(const Polynomial<Rational>& f) {
    std::vector<QuadFieldElem> c;
    c.reserve(f.coeffs().size());
    for (const auto& q : f.coeffs()) c.emplace_back(q);
    return Polynomial<QuadFieldElem>(std::move(c));
}

/// Rational image of a Q(sqrt(d)) polynomial, when every coefficient is rational.
inline std::optional<Polynomial<Rational>> to_rational_poly(const Polynomial<QuadFieldElem>& f) {
    std::vector<Rational> c;
    c.reserve(f.coeffs().size());
    for (const auto& q : f.coeffs()) {
        if (!q.is_rational()) return std::nullopt;
        c.push_back(q.rat_part());
    }
    return Polynomial<Rational>(std::move(c));
}

/// Coefficient-wise Galois conjugate sqrt(d) -> -sqrt(d).
inline Polynomial<QuadFieldElem> conj_poly(const Polynomial<QuadFieldElem>& f) {
    std::vector<QuadFieldElem> c;
    c.reserve(f.coeffs().size());
    for (const auto& q : f.coeffs()) c.push_back(q.conj());
    return Polynomial<QuadFieldElem>(std::move(c));
}

/**
 * Multiply a rational polynomial by the positive rational that makes it a
 * primitive integer polynomial with positive leading coefficient.
 */
inline Polynomial<Rational> primitive_integer_scaled(const Polynomial<Rational>& f) {
    if (f.is_zero()) return f;
    Int den(1);
    for (const auto& q : f.coeffs()) den = lcm(den, denominator(q));
    Int content(0);
    for (const auto& q : f.coeffs()) content = gcd(content, Int(numerator(q) * (den / denominator(q))));
    Rational scale = Rational(den, content);
    Polynomial<Rational> g = f * scale;
    if (g.lc() < 0) g = -g;
    return g;
}

inline Int int_coeff(const Polynomial<Rational>& f, size_t i) {
    Rational c = f.coeff(i);
    if (denominator(c) != 1) throw std::logic_error("int_coeff: non-integer coefficient");
    return numerator(c);
}

}  // namespace rre
