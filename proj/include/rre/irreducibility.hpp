/**
 * @file irreducibility.hpp
 * @brief Irreducibility certificates over Q and over real quadratic fields.
 *
 * The certificate cascade over Q, in order:
 *   1. rational-root search (complete; reports a linear factor),
 *   2. Eisenstein on f(X + k) for |k| <= kEisensteinShiftBound,
 *   3. Corollary-style binomial test for X^p - a with p prime,
 *   4. degree <= 3: rational-root absence suffices,
 *   5. degree 4: exhaustive integer quadratic-factor search,
 *   6. reduction mod primes p <= kModPrimeBound with an exhaustive
 *      irreducibility check of the reduction.
 * Everything is sound; when no method decides within its documented bound
 * the certificate is Unknown (never a guess).
 *
 * Over Q(sqrt(d)) only degrees <= 3 are decided (root-in-field search via the
 * rational norm polynomial); higher degrees report Unknown.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rre/polynomial.hpp"
#include "rre/sturm.hpp"

namespace rre {

inline constexpr long kEisensteinShiftBound = 10;
inline constexpr unsigned long kModPrimeBound = 100;
// candidate count caps for the exhaustive searches
inline constexpr unsigned long long kModPExhaustiveBudget = 2000000;
inline constexpr unsigned long long kQuadFactorBudget = 5000000;

enum class CertStatus { irreducible, reducible, unknown };

enum class CertMethod {
    none,
    no_root_deg_le3,     // degree <= 3 and no root in the ground field
    eisenstein,          // Eisenstein at (prime, shift)
    mod_p_irreducible,   // irreducible reduction mod p
    quartic_exhaustive,  // no quadratic factor found by exhaustive search
    binomial_pth_power,  // X^p - a with a not a p-th power
};

struct IrreducibilityCertificate {
    CertStatus status = CertStatus::unknown;
    CertMethod method = CertMethod::none;
    long prime = 0;  // Eisenstein / mod-p prime
    long shift = 0;  // Eisenstein shift k
    Polynomial<Rational> factor;           // nontrivial factor when reducible (over Q)
    Polynomial<QuadFieldElem> factor_quad;  // over Q(sqrt(d))
    std::string note;

    bool irreducible() const { return status == CertStatus::irreducible; }
    bool reducible() const { return status == CertStatus::reducible; }

    std::string describe() const {
        switch (status) {
            case CertStatus::reducible:
                return "reducible";
            case CertStatus::unknown:
                return "unknown" + (note.empty() ? "" : " (" + note + ")");
            case CertStatus::irreducible:
                break;
        }
        switch (method) {
            case CertMethod::no_root_deg_le3:
                return "irreducible (degree <= 3, no root in ground field)";
            case CertMethod::eisenstein:
                return "irreducible (Eisenstein p=" + std::to_string(prime) +
                       ", shift " + std::to_string(shift) + ")";
            case CertMethod::mod_p_irreducible:
                return "irreducible (irreducible mod " + std::to_string(prime) + ")";
            case CertMethod::quartic_exhaustive:
                return "irreducible (quartic, exhaustive quadratic-factor search)";
            case CertMethod::binomial_pth_power:
                return "irreducible (binomial X^p - a, a not a p-th power)";
            default:
                return "irreducible";
        }
    }
};

namespace detail {

inline std::optional<std::pair<long, long>> eisenstein_search(const Polynomial<Rational>& fint) {
    // fint: primitive integer polynomial
    std::vector<long> shifts{0};
    for (long k = 1; k <= kEisensteinShiftBound; ++k) {
        shifts.push_back(k);
        shifts.push_back(-k);
    }
    for (long k : shifts) {
        Polynomial<Rational> g = fint.shift_arg(Rational(k));
        Int lead = int_coeff(g, static_cast<size_t>(g.degree()));
        Int gc(0);
        for (long i = 0; i < g.degree(); ++i) gc = gcd(gc, int_coeff(g, static_cast<size_t>(i)));
        if (gc <= 1) continue;
        auto pf = prime_factors(gc);
        if (!pf) continue;
        Int c0 = int_coeff(g, 0);
        for (const Int& p : *pf) {
            if (lead % p == 0) continue;
            if (c0 % (p * p) == 0) continue;
            if (p > 1000000000) continue;  // keep the certificate printable
            return std::make_pair(p.convert_to<long>(), k);
        }
    }
    return std::nullopt;
}

// --- F_p polynomial helpers (coefficients 0..p-1, index = degree) ---

inline std::vector<unsigned long> fp_reduce(const Polynomial<Rational>& fint, unsigned long p) {
    std::vector<unsigned long> out(static_cast<size_t>(fint.degree()) + 1);
    for (size_t i = 0; i < out.size(); ++i) {
        Int c = int_coeff(fint, i) % static_cast<long>(p);
        if (c < 0) c += static_cast<long>(p);
        out[i] = c.convert_to<unsigned long>();
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

inline bool fp_divides(const std::vector<unsigned long>& g, std::vector<unsigned long> r, unsigned long p) {
    // g monic; returns true iff g | r in F_p[X]
    while (r.size() >= g.size() && !r.empty()) {
        unsigned long factor = r.back();
        size_t shift = r.size() - g.size();
        for (size_t i = 0; i < g.size(); ++i) {
            unsigned long sub = (factor * g[i]) % p;
            unsigned long& slot = r[i + shift];
            slot = (slot + p - sub) % p;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return r.empty();
}

/// Exhaustive check that the mod-p reduction (same degree as f) is irreducible.
inline bool fp_irreducible_exhaustive(const std::vector<unsigned long>& f, unsigned long p,
                                      unsigned long long budget) {
    const size_t n = f.size() - 1;
    // count monic candidates of degree 1..n/2
    unsigned long long total = 0;
    for (size_t m = 1; m <= n / 2; ++m) {
        unsigned long long cnt = 1;
        for (size_t i = 0; i < m; ++i) {
            cnt *= p;
            if (cnt > budget) return false;  // out of budget: caller treats as inconclusive
        }
        total += cnt;
        if (total > budget) return false;
    }
    for (size_t m = 1; m <= n / 2; ++m) {
        std::vector<unsigned long> g(m + 1, 0);
        g[m] = 1;
        for (;;) {
            if (fp_divides(g, f, p)) return false;
            // odometer over the m low coefficients
            size_t i = 0;
            while (i < m) {
                if (++g[i] < p) break;
                g[i] = 0;
                ++i;
            }
            if (i == m) break;
        }
    }
    return true;
}

inline std::optional<long> modp_irreducible_search(const Polynomial<Rational>& fint) {
    for (unsigned long p : primes_up_to(kModPrimeBound)) {
        if (int_coeff(fint, static_cast<size_t>(fint.degree())) % p == 0) continue;
        auto red = fp_reduce(fint, p);
        if (red.size() != static_cast<size_t>(fint.degree()) + 1) continue;
        if (fp_irreducible_exhaustive(red, p, kModPExhaustiveBudget)) return static_cast<long>(p);
    }
    return std::nullopt;
}

/**
 * Integer quadratic factors X^2 + a X + b of a monic integer polynomial H.
 * Complete within the Cauchy box |a| <= 2B, |b| <= B^2; throws past the
 * iteration budget.
 */
inline std::vector<std::pair<Int, Int>> monic_quadratic_factors(const Polynomial<Rational>& H,
                                                                bool stop_at_first) {
    std::vector<std::pair<Int, Int>> found;
    Rational bound = cauchy_root_bound(H);
    Int B = numerator(bound) / denominator(bound) + 1;
    Int a_max = 2 * B, b_max = B * B;
    Int h0 = int_coeff(H, 0);
    if (Rational(b_max) > Rational(Int(kQuadFactorBudget)))
        throw std::runtime_error("quadratic-factor search box too large");
    unsigned long long iter = 0;
    for (Int b = -b_max; b <= b_max; ++b) {
        if (++iter > kQuadFactorBudget)
            throw std::runtime_error("quadratic-factor search exceeded its budget");
        if (b == 0) continue;        // constant term 0 means a rational root 0, handled elsewhere
        if (h0 != 0 && h0 % b != 0) continue;  // b must divide H(0)
        for (Int a = -a_max; a <= a_max; ++a) {
            if (++iter > kQuadFactorBudget)
                throw std::runtime_error("quadratic-factor search exceeded its budget");
            Polynomial<Rational> g{Rational(b), Rational(a), Rational(1)};
            if (divides(g, H)) {
                found.emplace_back(a, b);
                if (stop_at_first) return found;
            }
        }
    }
    return found;
}

/// H(X) = lc^{n-1} f(X/lc): monic integer polynomial with the scaled roots of f.
inline Polynomial<Rational> monicized(const Polynomial<Rational>& fint) {
    const long n = fint.degree();
    Rational lead = fint.lc();
    Polynomial<Rational> h = fint.scale_arg(Rational(1) / lead) * rat_pow(lead, n - 1);
    return h;
}

}  // namespace detail

/**
 * Certificate cascade over Q. Requires deg f >= 1; the polynomial is scaled
 * to primitive integer form internally.
 */
inline IrreducibilityCertificate irreducibility_certificate(const Polynomial<Rational>& f) {
    if (f.degree() < 1) throw std::invalid_argument("irreducibility_certificate: degree < 1");
    IrreducibilityCertificate cert;
    Polynomial<Rational> fint = primitive_integer_scaled(f);
    const long n = fint.degree();

    if (n == 1) {
        cert.status = CertStatus::irreducible;
        cert.method = CertMethod::no_root_deg_le3;
        return cert;
    }

    // 1. rational roots
    for (const Rational& r : find_rational_roots(fint)) {
        cert.status = CertStatus::reducible;
        cert.factor = Polynomial<Rational>{-r, Rational(1)};
        cert.note = "rational root " + to_string(r);
        return cert;
    }

    // 2. Eisenstein with shifts
    if (auto e = detail::eisenstein_search(fint)) {
        cert.status = CertStatus::irreducible;
        cert.method = CertMethod::eisenstein;
        cert.prime = e->first;
        cert.shift = e->second;
        return cert;
    }

    // 3. binomial X^p - a, p prime (no root in Q was already established,
    //    so irreducibility follows for prime degree)
    if (n >= 2 && is_small_prime(static_cast<unsigned long>(n))) {
        bool binomial = !scalar_is_zero(fint.coeff(0));
        for (long i = 1; i < n && binomial; ++i)
            if (!scalar_is_zero(fint.coeff(static_cast<size_t>(i)))) binomial = false;
        if (binomial) {
            Rational a = -fint.coeff(0) / fint.lc();
            if (!is_pth_power(a, static_cast<unsigned>(n))) {
                cert.status = CertStatus::irreducible;
                cert.method = CertMethod::binomial_pth_power;
                cert.note = "a = " + to_string(a);
                return cert;
            }
            // a p-th power would have produced a rational root above
        }
    }

    // 4. degree <= 3: no rational root suffices
    if (n <= 3) {
        cert.status = CertStatus::irreducible;
        cert.method = CertMethod::no_root_deg_le3;
        return cert;
    }

    // 5. quartic: exhaustive quadratic-factor search on the monicization
    if (n == 4) {
        try {
            Polynomial<Rational> H = detail::monicized(fint);
            auto factors = detail::monic_quadratic_factors(H, true);
            if (factors.empty()) {
                cert.status = CertStatus::irreducible;
                cert.method = CertMethod::quartic_exhaustive;
                return cert;
            }
            // map the factor of H back: X^2 + aX + b divides H(X) = lc f(X/lc)
            // => lc^2 X^2 + a lc X + b divides f up to scaling.
            Rational lead = fint.lc();
            auto [a, b] = factors.front();
            Polynomial<Rational> g{Rational(b), Rational(a) * lead, lead * lead};
            cert.status = CertStatus::reducible;
            cert.factor = primitive_integer_scaled(g);
            cert.note = "quadratic factor";
            return cert;
        } catch (const std::runtime_error&) {
            cert.status = CertStatus::unknown;
            cert.note = "quartic factor search out of budget";
            return cert;
        }
    }

    // 6. reduction mod p
    if (auto p = detail::modp_irreducible_search(fint)) {
        cert.status = CertStatus::irreducible;
        cert.method = CertMethod::mod_p_irreducible;
        cert.prime = *p;
        return cert;
    }

    cert.status = CertStatus::unknown;
    cert.note = "no deciding method within documented bounds";
    return cert;
}

/**
 * All roots of g inside Q(sqrt(d)), d > 1. Every such root has a degree <= 2
 * minimal polynomial dividing the rational norm polynomial N = g * conj(g),
 * so rational roots of N plus its integer quadratic factors (with
 * discriminant in d * squares) cover everything.
 */
inline std::vector<QuadFieldElem> roots_in_quad_field(const Polynomial<QuadFieldElem>& g, unsigned d) {
    if (d < 2) throw std::invalid_argument("roots_in_quad_field: need d > 1");
    std::vector<QuadFieldElem> out;
    if (g.is_zero()) throw std::invalid_argument("roots_in_quad_field: zero polynomial");
    auto push_unique = [&out](const QuadFieldElem& r) {
        for (const auto& x : out)
            if (x == r) return;
        out.push_back(r);
    };

    Polynomial<QuadFieldElem> norm_q = g * conj_poly(g);
    auto norm = to_rational_poly(norm_q);
    if (!norm) throw std::logic_error("roots_in_quad_field: norm polynomial not rational");

    for (const Rational& r : find_rational_roots(*norm)) {
        QuadFieldElem cand(r);
        if (scalar_is_zero(g.eval(cand))) push_unique(cand);
    }

    Polynomial<Rational> fint = primitive_integer_scaled(*norm);
    // strip powers of X (root 0 already handled)
    size_t low = 0;
    while (scalar_is_zero(fint.coeff(low))) ++low;
    if (low > 0) {
        std::vector<Rational> c(fint.coeffs().begin() + static_cast<long>(low), fint.coeffs().end());
        fint = Polynomial<Rational>(std::move(c));
    }
    if (fint.degree() < 2) return out;
    Polynomial<Rational> H = detail::monicized(fint);
    Rational lead = fint.lc();
    for (auto& [a, b] : detail::monic_quadratic_factors(H, false)) {
        // roots of X^2 + aX + b scaled back by 1/lead
        Rational disc = Rational(a) * Rational(a) - 4 * Rational(b);
        Rational ratio = disc / Rational(static_cast<long>(d));
        auto w = rational_sqrt(ratio);
        if (!w) continue;
        Rational u = Rational(-a) / 2 / lead;
        Rational v = *w / 2 / lead;
        for (int s : {1, -1}) {
            QuadFieldElem cand(u, s > 0 ? v : Rational(-v), d);
            if (scalar_is_zero(g.eval(cand))) push_unique(cand);
        }
    }
    return out;
}

/**
 * Irreducibility over Q(sqrt(d)): complete for degrees <= 3 via the
 * root-in-field search; degree 2 also uses the discriminant square test.
 * Degrees >= 4 return Unknown (general factorization over number fields is
 * out of scope).
 */
inline IrreducibilityCertificate quad_irreducibility(const Polynomial<QuadFieldElem>& f, unsigned d) {
    if (f.degree() < 1) throw std::invalid_argument("quad_irreducibility: degree < 1");
    IrreducibilityCertificate cert;
    const long n = f.degree();
    if (n == 1) {
        cert.status = CertStatus::irreducible;
        cert.method = CertMethod::no_root_deg_le3;
        return cert;
    }
    if (n <= 3) {
        std::vector<QuadFieldElem> roots;
        if (d >= 2) {
            try {
                roots = roots_in_quad_field(f, d);
            } catch (const std::runtime_error&) {
                cert.status = CertStatus::unknown;
                cert.note = "root-in-field search out of budget";
                return cert;
            }
        } else {
            auto fr = to_rational_poly(f);
            if (!fr) throw FieldMismatch("quad_irreducibility: irrational coefficients with d = 0");
            for (const Rational& r : find_rational_roots(*fr)) roots.emplace_back(r);
        }
        if (!roots.empty()) {
            cert.status = CertStatus::reducible;
            cert.factor_quad = Polynomial<QuadFieldElem>{-roots.front(), QuadFieldElem(1)};
            cert.note = "root in ground field: " + roots.front().str();
            return cert;
        }
        cert.status = CertStatus::irreducible;
        cert.method = CertMethod::no_root_deg_le3;
        return cert;
    }
    cert.status = CertStatus::unknown;
    cert.note = "degree >= 4 over Q(sqrt(d)) not decided";
    return cert;
}

}  // namespace rre
