/**
 * @file sturm.hpp
 * @brief Exact real-root counting and isolation via Sturm sequences.
 *
 * Works over Q and over Q(sqrt(d)) embedded in R; all evaluation points stay
 * rational and every sign is computed exactly. Non-squarefree inputs to the
 * counting and isolation entry points are reduced via squarefree_part and the
 * reduction is flagged in the result; multiplicities are never reported.
 */
#pragma once

#include <optional>
#include <vector>

#include "rre/polynomial.hpp"

namespace rre {

/// Open-left, closed-right rational interval around a single real root.
struct IsolatingInterval {
    Rational lo, hi;
    bool hi_is_root = false;  // hi is the root itself, exactly
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
};

inline const Rational& default_isolation_width() {
    static const Rational w(Int(1), Int(1) << 20);
    return w;
}

namespace detail {

// positive-rational scaling keeps Sturm coefficients small over Q and never
// changes a sign
inline Polynomial<Rational> sign_normalize(const Polynomial<Rational>& f) {
    if (f.is_zero()) return f;
    Polynomial<Rational> g = primitive_integer_scaled(f);
    return f.lc() < 0 ? -g : g;
}
inline Polynomial<QuadFieldElem> sign_normalize(const Polynomial<QuadFieldElem>& f) { return f; }

}  // namespace detail

/// Standard Sturm chain f, f', -rem(...), ending at a nonzero constant.
template <class K>
std::vector<Polynomial<K>> sturm_chain(const Polynomial<K>& f) {
    if (f.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
    if (!is_squarefree(f)) throw std::invalid_argument("sturm_chain: input not squarefree");
    std::vector<Polynomial<K>> chain;
    chain.push_back(f);
    if (f.degree() == 0) return chain;
    chain.push_back(f.derivative());
    while (chain.back().degree() > 0) {
        Polynomial<K> r = chain[chain.size() - 2].divmod(chain.back()).second;
        if (r.is_zero()) throw std::logic_error("sturm_chain: squarefree input produced zero remainder");
        chain.push_back(detail::sign_normalize(-r));
    }
    return chain;
}

namespace detail {

inline int variations(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

template <class K>
int variations_at(const std::vector<Polynomial<K>>& chain, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) signs.push_back(sign(p.eval(K(x))));
    return variations(signs);
}

template <class K>
int variations_at_inf(const std::vector<Polynomial<K>>& chain, bool plus) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) {
        int s = sign(p.lc());
        if (!plus && p.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return variations(signs);
}

}  // namespace detail

template <class K>
struct RootCountResult {
    size_t count = 0;
    bool reduced_multiplicity = false;  // input was not squarefree
    Polynomial<K> squarefree;
};

/**
 * Exact count of distinct real roots of f in (lo, hi]; absent bounds mean
 * -inf / +inf. Endpoint roots are handled by exact deflation, so the
 * evaluation points of the Sturm chain are never roots of the polynomial.
 */
template <class K>
RootCountResult<K> count_real_roots_detail(const Polynomial<K>& f, std::optional<Rational> lo,
                                           std::optional<Rational> hi) {
    if (f.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
    if (lo && hi && !(*lo < *hi)) throw std::invalid_argument("count_real_roots: empty interval");
    RootCountResult<K> res;
    Polynomial<K> g = squarefree_part(f);
    res.reduced_multiplicity = g.degree() != f.degree();
    res.squarefree = g;

    size_t endpoint_roots = 0;
    if (hi) {
        while (g.degree() > 0 && scalar_is_zero(g.eval(K(*hi)))) {
            g = g.divmod(Polynomial<K>{K(-*hi), K(1)}).first;
            ++endpoint_roots;  // hi is included in (lo, hi]
        }
    }
    if (lo) {
        while (g.degree() > 0 && scalar_is_zero(g.eval(K(*lo)))) {
            g = g.divmod(Polynomial<K>{K(-*lo), K(1)}).first;  // lo excluded
        }
    }
    if (g.degree() <= 0) {
        res.count = endpoint_roots;
        return res;
    }
    auto chain = sturm_chain(g);
    int vlo = lo ? detail::variations_at(chain, *lo) : detail::variations_at_inf(chain, false);
    int vhi = hi ? detail::variations_at(chain, *hi) : detail::variations_at_inf(chain, true);
    res.count = static_cast<size_t>(vlo - vhi) + endpoint_roots;
    return res;
}

template <class K>
size_t count_real_roots(const Polynomial<K>& f, std::optional<Rational> lo = std::nullopt,
                        std::optional<Rational> hi = std::nullopt) {
    return count_real_roots_detail(f, lo, hi).count;
}

template <class K>
struct IsolationResult {
    std::vector<IsolatingInterval> intervals;
    bool reduced_multiplicity = false;
    Polynomial<K> squarefree;
};

/**
 * One disjoint interval per distinct real root, each bisected below `width`.
 * For every returned interval either the endpoint signs differ or hi is an
 * exact rational root.
 */
template <class K>
IsolationResult<K> isolate_real_roots(const Polynomial<K>& f,
                                      const Rational& width = default_isolation_width()) {
    if (f.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    IsolationResult<K> res;
    Polynomial<K> g = squarefree_part(f);
    res.reduced_multiplicity = g.degree() != f.degree();
    res.squarefree = g;
    if (g.degree() <= 0) return res;

    auto chain = sturm_chain(g);
    auto count_on = [&](const Rational& a, const Rational& b) {
        // roots in (a, b]; a and b must not be roots of g
        return detail::variations_at(chain, a) - detail::variations_at(chain, b);
    };

    Rational bound = cauchy_root_bound(g);
    struct Task {
        Rational lo, hi;
        int n;
    };
    std::vector<Task> stack;
    {
        int total = count_on(-bound, bound);
        if (total > 0) stack.push_back({-bound, bound, total});
    }
    auto emit = [&res](Rational lo, Rational hi, bool exact) {
        res.intervals.push_back({std::move(lo), std::move(hi), exact});
    };

    while (!stack.empty()) {
        Task t = stack.back();
        stack.pop_back();
        if (t.n == 1 && t.hi - t.lo <= width && !scalar_is_zero(g.eval(K(t.hi)))) {
            emit(t.lo, t.hi, false);
            continue;
        }
        Rational m = (t.lo + t.hi) / 2;
        if (scalar_is_zero(g.eval(K(m)))) {
            // exact rational root at the midpoint: carve out a small interval
            Rational delta = std::min(width, Rational(t.hi - t.lo) / 4);
            while (scalar_is_zero(g.eval(K(m - delta))) || scalar_is_zero(g.eval(K(m + delta))) ||
                   count_on(m - delta, m + delta) != 1) {
                delta /= 2;
            }
            emit(m - delta, m, true);
            int left = count_on(t.lo, m - delta);
            if (left > 0) stack.push_back({t.lo, m - delta, left});
            int right = count_on(m + delta, t.hi);
            if (right > 0) stack.push_back({m + delta, t.hi, right});
            continue;
        }
        int left = count_on(t.lo, m);
        if (left > 0) stack.push_back({t.lo, m, left});
        if (t.n - left > 0) stack.push_back({m, t.hi, t.n - left});
    }
    std::sort(res.intervals.begin(), res.intervals.end(),
              [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
    return res;
}

/**
 * The three-real-roots criterion for X^3 - 3X + a: true iff -2 < a < 2 under
 * the real embedding.
 */
template <class K>
bool cubic_three_root_criterion(const K& a) {
    return sign(a - K(-2)) > 0 && sign(a - K(2)) < 0;
}

/**
 * All rational roots of f, found completely: a rational root p/q (reduced)
 * has q | lc, and each root lies in some isolating interval, so shrinking the
 * interval below 1/q pins down at most one candidate numerator p.
 */
inline std::vector<Rational> find_rational_roots(const Polynomial<Rational>& f) {
    std::vector<Rational> out;
    if (f.is_zero()) throw std::invalid_argument("find_rational_roots: zero polynomial");
    if (f.degree() == 0) return out;
    Polynomial<Rational> fint = primitive_integer_scaled(f);
    auto qs = divisors(int_coeff(fint, static_cast<size_t>(fint.degree())));
    if (!qs) throw std::runtime_error("find_rational_roots: leading coefficient too hard to factor");

    auto push_unique = [&out](const Rational& r) {
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    };
    auto iso = isolate_real_roots(fint);
    for (const auto& iv : iso.intervals) {
        if (iv.hi_is_root) {
            push_unique(iv.hi);
            continue;
        }
        for (const Int& q : *qs) {
            // a root p/q in (lo, hi] needs the unique integer p in (q lo, q hi];
            // bisect along the sign change until the window is that narrow
            Rational lo = iv.lo, hi = iv.hi;
            bool hit = false;
            while ((hi - lo) * Rational(q) >= 1) {
                Rational m = (lo + hi) / 2;
                Rational fm = fint.eval(m);
                if (fm == 0) {
                    push_unique(m);
                    hit = true;
                    break;
                }
                if (sign(fint.eval(lo)) == sign(fm))
                    lo = m;
                else
                    hi = m;
            }
            if (hit) break;
            Rational qhi = Rational(q) * hi;
            Int p = numerator(qhi) / denominator(qhi);
            if (Rational(p) > qhi) --p;  // floor for negatives
            Rational cand(p, q);
            if (cand > lo && cand <= hi && fint.eval(cand) == 0) {
                push_unique(cand);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace rre
