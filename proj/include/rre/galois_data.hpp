/**
 * @file galois_data.hpp
 * @brief Galois configurations (G, U, N, M) with cyclotomic characters for
 *        the families where they are explicitly computable: binomial
 *        splitting fields, cyclotomic fields and their subfields, and
 *        small-degree Galois groups of cubics/quartics.
 *
 * The splitting field E is never represented as a field; only its Galois
 * data is materialized, since the radical criteria consume group data plus
 * characters. Correspondence used for the binomial model of X^n - a with
 * alpha the real n-th root and zeta a primitive n-th root of unity:
 *
 *   field            group (affine maps x -> cx + b on Z/n)
 *   E = Q(zeta, alpha)   G  = all maps, |G| = n phi(n)
 *   F = Q(zeta)          N  = translations x -> x + b   (= Gal(E/F))
 *   L = Q(alpha)         U  = stabilizer of 0: x -> cx  (= Gal(E/L))
 *   Q                    G itself as Gal(E/Q)
 *   chi_q(x -> cx+b) = c mod q for odd primes q | n.
 */
#pragma once

#include <optional>

#include "rre/group.hpp"
#include "rre/irreducibility.hpp"
#include "rre/polynomial.hpp"

namespace rre {

inline Perm mult_perm(size_t n, long u) {
    std::vector<int> v(n);
    for (size_t x = 0; x < n; ++x) v[x] = static_cast<int>((u * static_cast<long>(x)) % static_cast<long>(n));
    return Perm(std::move(v));
}

inline Perm affine_perm(size_t n, long c, long b) {
    std::vector<int> v(n);
    for (size_t x = 0; x < n; ++x)
        v[x] = static_cast<int>(((c * static_cast<long>(x) + b) % static_cast<long>(n) + static_cast<long>(n)) %
                                static_cast<long>(n));
    return Perm(std::move(v));
}

/// (Z/n)^x acting on Z/n by multiplication.
inline Group units_group(size_t n) {
    std::vector<Perm> gens;
    for (size_t u = 1; u < n; ++u)
        if (std::gcd(u, n) == 1) gens.push_back(mult_perm(n, static_cast<long>(u)));
    if (n == 1) gens.push_back(Perm::identity(1));
    return Group::closure(n, gens);
}

/// The unit represented by a multiplication permutation.
inline long unit_of(const Perm& p) { return p.degree() > 1 ? p.apply(1) : 1; }

/// Unique subgroup of the given order when (Z/n)^x is cyclic.
inline Group units_subgroup_of_order(size_t n, size_t order) {
    Group full = units_group(n);
    if (full.order() % order != 0)
        throw std::invalid_argument("units_subgroup_of_order: order does not divide phi(n)");
    for (const Perm& g : full.elements()) {
        if (g.order() == full.order()) {  // primitive root: the unit group is cyclic
            Group h = Group::closure(n, {g.pow(static_cast<long>(full.order() / order))});
            if (h.order() != order) throw std::logic_error("units_subgroup_of_order: bad power");
            return h;
        }
    }
    throw std::invalid_argument("units_subgroup_of_order: (Z/n)^x not cyclic; pass generators instead");
}

inline Group units_subgroup_from_gens(size_t n, const std::vector<long>& units) {
    std::vector<Perm> gens;
    for (long u : units) {
        long r = ((u % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n);
        if (std::gcd(static_cast<size_t>(r), n) != 1)
            throw std::invalid_argument("units_subgroup_from_gens: not a unit mod n");
        gens.push_back(mult_perm(n, r));
    }
    return Group::closure(n, gens);
}

/**
 * The (G, U, N, M) configuration plus cyclotomic characters. Validated at
 * construction: N normal in G with abelian quotient, characters are
 * homomorphisms into (Z/p)^x vanishing on N. M is always derived as U cap N.
 */
struct GaloisDatum {
    Group G, U, N, M;
    // prime p -> exponent in (Z/p)^x for every element of G (aligned with G.elements())
    std::map<long, std::vector<long>> characters;
    bool l_quasireal = false;
    std::optional<Perm> conjugation;  // designated involution in U inverting every character
    std::string label_ground, label_L, label_F, label_E;
    std::optional<size_t> radical_by_construction_degree;  // L = ground[zeta], one radical step

    bool has_char(long p) const { return characters.count(p) > 0; }
    long char_value(long p, const Perm& g) const { return characters.at(p)[G.element_index(g)]; }

    size_t degree_L() const { return G.order() / U.order(); }

    void validate() const {
        require_subgroup(U, G, "GaloisDatum U");
        require_subgroup(N, G, "GaloisDatum N");
        if (!is_normal_in(N, G)) throw std::invalid_argument("GaloisDatum: N not normal in G");
        if (!derived_subgroup(G).is_subgroup_of(N))
            throw std::invalid_argument("GaloisDatum: G/N not abelian");
        if (M != intersection(U, N)) throw std::invalid_argument("GaloisDatum: M != U cap N");
        for (const auto& [p, vals] : characters) {
            if (vals.size() != G.order()) throw std::invalid_argument("GaloisDatum: character table size");
            for (long v : vals)
                if (v <= 0 || v >= p) throw std::invalid_argument("GaloisDatum: character value out of range");
            for (size_t i = 0; i < G.order(); ++i)
                for (size_t j = 0; j < G.order(); ++j) {
                    Perm prod = G.elements()[i] * G.elements()[j];
                    if (vals[G.element_index(prod)] != (vals[i] * vals[j]) % p)
                        throw std::invalid_argument("GaloisDatum: character not a homomorphism");
                }
            for (const Perm& x : N.elements())
                if (vals[G.element_index(x)] != 1)
                    throw std::invalid_argument("GaloisDatum: character does not kill N");
        }
        if (conjugation) {
            if (!U.contains(*conjugation) || conjugation->is_identity() ||
                !(*conjugation * *conjugation).is_identity())
                throw std::invalid_argument("GaloisDatum: designated conjugation not an involution in U");
        }
    }
};

namespace detail {

/// Affine-group datum for X^n - a with full Galois group, n = p or 9.
inline GaloisDatum affine_binomial_datum(size_t n, const Rational& a) {
    GaloisDatum d;
    std::vector<Perm> ugens;
    for (size_t u = 2; u < n; ++u)
        if (std::gcd(u, n) == 1) ugens.push_back(affine_perm(n, static_cast<long>(u), 0));
    Perm trans = affine_perm(n, 1, 1);
    std::vector<Perm> ggens = ugens;
    ggens.push_back(trans);
    d.G = Group::closure(n, ggens);
    d.U = Group::closure(n, ugens);
    d.N = Group::closure(n, {trans});
    d.M = intersection(d.U, d.N);
    for (unsigned long q : primes_up_to(n)) {
        if (q == 2 || n % q != 0) continue;
        std::vector<long> vals(d.G.order());
        for (size_t i = 0; i < d.G.order(); ++i) {
            const Perm& g = d.G.elements()[i];
            long c = ((g.apply(1) - g.apply(0)) % static_cast<long>(n) + static_cast<long>(n)) %
                     static_cast<long>(n);
            vals[i] = static_cast<long>(c % q);
        }
        d.characters.emplace(static_cast<long>(q), std::move(vals));
    }
    d.l_quasireal = true;  // L = Q(real n-th root of a) is a real field
    if (n > 2) d.conjugation = affine_perm(n, static_cast<long>(n) - 1, 0);
    std::string as = to_string(a), ns = std::to_string(n);
    d.label_ground = "Q";
    d.label_L = "Q(" + as + "^(1/" + ns + "))";
    d.label_F = "Q(zeta_" + ns + ")";
    d.label_E = "Q(zeta_" + ns + ", " + as + "^(1/" + ns + "))";
    d.validate();
    return d;
}

}  // namespace detail

/**
 * Galois datum of the splitting field of X^p - a over Q for an odd prime
 * p <= 19; requires the binomial to be irreducible, i.e. a not a p-th power.
 */
inline GaloisDatum build_binomial(size_t p, const Rational& a) {
    if (p < 3 || p > 19 || !is_small_prime(p))
        throw std::invalid_argument("build_binomial: p must be an odd prime <= 19");
    if (a == 0) throw std::invalid_argument("build_binomial: a = 0");
    if (auto r = is_pth_power(a, static_cast<unsigned>(p)))
        throw std::invalid_argument("build_binomial: X^p - a reducible, a = (" + to_string(*r) + ")^" +
                                    std::to_string(p));
    return detail::affine_binomial_datum(p, a);
}

/**
 * Degree-9 model: splitting field of X^9 - a (a = 2 by default) with the
 * full affine group mod 9 of order 54. Used as the synthetic prime-power
 * datum with |G : U| = 9.
 */
inline GaloisDatum build_binomial_nine(const Rational& a = Rational(2)) {
    if (is_pth_power(a, 3)) throw std::invalid_argument("build_binomial_nine: a is a cube");
    return detail::affine_binomial_datum(9, a);
}

/**
 * Cyclotomic datum: E = Q(zeta_n), ground field = fixed field of H_ground,
 * L = fixed field of H_field. E is abelian over the ground field and
 * contains all its roots of unity, so F = E and N is trivial.
 */
inline GaloisDatum build_cyclotomic(size_t n, const Group& h_ground, const Group& h_field) {
    if (n < 3 || n > 100) throw std::invalid_argument("build_cyclotomic: need 3 <= n <= 100");
    Group full = units_group(n);
    require_subgroup(h_ground, full, "build_cyclotomic H_ground");
    require_subgroup(h_field, h_ground, "build_cyclotomic H_field");

    GaloisDatum d;
    d.G = h_ground;
    d.U = h_field;
    d.N = Group::trivial(n);
    d.M = d.N;
    for (unsigned long q : primes_up_to(n)) {
        if (q == 2 || n % q != 0) continue;
        std::vector<long> vals(d.G.order());
        for (size_t i = 0; i < d.G.order(); ++i)
            vals[i] = static_cast<long>(static_cast<unsigned long>(unit_of(d.G.elements()[i])) % q);
        d.characters.emplace(static_cast<long>(q), std::move(vals));
    }

    // roots of unity in Q(zeta_n) are the n'-th ones, n' = n (n even) or 2n
    size_t nprime = (n % 2 == 0) ? n : 2 * n;
    auto lift = [&](long u) -> size_t {
        size_t r = static_cast<size_t>(u);
        if (n % 2 == 1 && r % 2 == 0) r += n;  // odd representative mod 2n
        return r;
    };
    d.l_quasireal = true;
    for (size_t j = 1; j < nprime; ++j) {
        if (j == nprime / 2) continue;  // -1 is allowed in a quasireal field
        bool fixed = true;
        for (const Perm& g : d.U.elements()) {
            size_t u = lift(unit_of(g));
            if ((u * j) % nprime != j % nprime) {
                fixed = false;
                break;
            }
        }
        if (fixed) {
            d.l_quasireal = false;
            break;
        }
    }

    if (d.U.is_trivial()) d.radical_by_construction_degree = d.G.order();  // L = ground[zeta_n]

    // designated conjugation: the unit -1 when it fixes L (i.e. lies in U)
    Perm minus1 = mult_perm(n, static_cast<long>(n) - 1);
    if (d.U.contains(minus1) && !minus1.is_identity()) d.conjugation = minus1;

    d.label_ground = "fixed field of H_ground in Q(zeta_" + std::to_string(n) + ")";
    d.label_L = d.U.is_trivial() ? "Q(zeta_" + std::to_string(n) + ")"
                                 : "fixed field of H_field in Q(zeta_" + std::to_string(n) + ")";
    d.label_F = "Q(zeta_" + std::to_string(n) + ")";
    d.label_E = "Q(zeta_" + std::to_string(n) + ")";
    d.validate();
    return d;
}

inline bool is_power_of_two(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

struct TheoremAWitness {
    long prime = 0;       // least prime p = 1 mod 2n
    size_t degree = 0;    // n, a power of 2
    bool subfield_real = false;
    bool galois_cyclic_two_group = false;
    GaloisDatum datum;    // degree-n subfield of Q(zeta_p) over Q
};

/**
 * Degree-n real subfield of Q(zeta_p) for the least prime p = 1 mod 2n:
 * an irreducible polynomial of 2-power degree with all roots real and every
 * root in a real repeated radical extension.
 */
inline TheoremAWitness theorem_a_witness(size_t n) {
    if (n != 2 && n != 4 && n != 8 && n != 16)
        throw std::invalid_argument("theorem_a_witness: n must be one of 2, 4, 8, 16");
    size_t p = 2 * n + 1;
    while (!(is_small_prime(p) && (p - 1) % (2 * n) == 0)) ++p;

    TheoremAWitness w;
    w.prime = static_cast<long>(p);
    w.degree = n;
    Group full = units_group(p);
    Group h = units_subgroup_of_order(p, (p - 1) / n);
    w.datum = build_cyclotomic(p, full, h);
    w.datum.label_ground = "Q";
    w.datum.label_L = "degree-" + std::to_string(n) + " subfield of Q(zeta_" + std::to_string(p) + ")";

    // real: complex conjugation (the unit -1) fixes L, i.e. -1 in H
    w.subfield_real = h.contains(mult_perm(p, static_cast<long>(p) - 1));
    // Gal(L/Q) = G/U: cyclic of order n since (Z/p)^x is cyclic
    size_t quotient_order = w.datum.G.order() / w.datum.U.order();
    bool cyclic = false;
    for (const Perm& g : w.datum.G.elements()) {
        size_t k = 1;
        Perm x = g;
        while (!w.datum.U.contains(x)) {
            x = x * g;
            ++k;
        }
        if (k == quotient_order) {
            cyclic = true;
            break;
        }
    }
    w.galois_cyclic_two_group = cyclic && is_power_of_two(quotient_order) && quotient_order == n;
    return w;
}

// ---------------------------------------------------------------------------
// small-degree Galois groups over Q

enum class GaloisGroupLabel { C1, C2, C3, S3, V4, C4, D4, A4, S4 };

inline std::string label_name(GaloisGroupLabel l) {
    switch (l) {
        case GaloisGroupLabel::C1: return "C1";
        case GaloisGroupLabel::C2: return "C2";
        case GaloisGroupLabel::C3: return "C3";
        case GaloisGroupLabel::S3: return "S3";
        case GaloisGroupLabel::V4: return "V4";
        case GaloisGroupLabel::C4: return "C4";
        case GaloisGroupLabel::D4: return "D4";
        case GaloisGroupLabel::A4: return "A4";
        case GaloisGroupLabel::S4: return "S4";
    }
    return "?";
}

inline bool is_two_group_label(GaloisGroupLabel l) {
    return l == GaloisGroupLabel::C1 || l == GaloisGroupLabel::C2 || l == GaloisGroupLabel::V4 ||
           l == GaloisGroupLabel::C4 || l == GaloisGroupLabel::D4;
}

/**
 * Resolvent cubic of a monic quartic X^4 + pX^3 + qX^2 + rX + s: the cubic
 * with roots ab+cd, ac+bd, ad+bc, i.e.
 *   X^3 - q X^2 + (pr - 4s) X - (r^2 + p^2 s - 4 q s).
 */
template <class K>
Polynomial<K> quartic_resolvent_cubic(const Polynomial<K>& f) {
    if (f.degree() != 4) throw std::invalid_argument("quartic_resolvent_cubic: degree != 4");
    if (!(f.lc() == K(1))) throw std::invalid_argument("quartic_resolvent_cubic: not monic");
    K p = f.coeff(3), q = f.coeff(2), r = f.coeff(1), s = f.coeff(0);
    return Polynomial<K>{-(r * r + p * p * s - K(4) * q * s), p * r - K(4) * s, -q, K(1)};
}

struct GaloisGroupResult {
    GaloisGroupLabel label = GaloisGroupLabel::C1;
    Polynomial<Rational> resolvent;           // quartics only
    std::vector<Rational> resolvent_roots;    // rational roots of the resolvent
    bool discriminant_square = false;
};

/**
 * Galois group of an irreducible polynomial of degree 2, 3 or 4 over Q.
 * Degree 3: discriminant square test. Degree 4: resolvent-cubic root count,
 * discriminant square test and the classical two-quadratics refinement for
 * the C4/D4 split (whether X^2 - bX + s and X^2 + pX + (q - b) split over
 * Q(sqrt(disc)) for the rational resolvent root b). The refinement is
 * imported classical theory, not something the radical criteria provide.
 */
inline GaloisGroupResult galois_group_small_degree(const Polynomial<Rational>& f,
                                                   const IrreducibilityCertificate& cert) {
    if (!cert.irreducible())
        throw std::invalid_argument("galois_group_small_degree: need a certified irreducible input");
    GaloisGroupResult res;
    const long n = f.degree();
    if (n < 2 || n > 4) throw std::invalid_argument("galois_group_small_degree: degree must be 2..4");
    Rational disc = discriminant(f);
    res.discriminant_square = is_rational_square(disc);

    if (n == 2) {
        res.label = GaloisGroupLabel::C2;
        return res;
    }
    if (n == 3) {
        res.label = res.discriminant_square ? GaloisGroupLabel::C3 : GaloisGroupLabel::S3;
        return res;
    }

    Polynomial<Rational> m = f.monic();
    res.resolvent = quartic_resolvent_cubic(m);
    res.resolvent_roots = find_rational_roots(res.resolvent);
    switch (res.resolvent_roots.size()) {
        case 3:
            res.label = GaloisGroupLabel::V4;
            return res;
        case 0:
            res.label = res.discriminant_square ? GaloisGroupLabel::A4 : GaloisGroupLabel::S4;
            return res;
        case 1: {
            const Rational& b = res.resolvent_roots.front();
            Rational p = m.coeff(3), q = m.coeff(2), s = m.coeff(0);
            auto square_in_q_sqrt_disc = [&disc](const Rational& x) {
                if (x == 0) return true;
                if (is_rational_square(x)) return true;
                return is_rational_square(x / disc);
            };
            Rational d1 = b * b - 4 * s;
            Rational d2 = p * p - 4 * (q - b);
            res.label = (square_in_q_sqrt_disc(d1) && square_in_q_sqrt_disc(d2)) ? GaloisGroupLabel::C4
                                                                                 : GaloisGroupLabel::D4;
            return res;
        }
        default:
            throw std::logic_error("galois_group_small_degree: resolvent of an irreducible quartic had 2 rational roots");
    }
}

}  // namespace rre
