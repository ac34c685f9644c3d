/**
 * @file classifier.hpp
 * @brief Top-level classifier: which real roots of an irreducible polynomial
 *        over a real ground field (Q or Q(sqrt(d))) lie in real repeated
 *        radical extensions, with the deciding criterion and, where the
 *        arguments are constructive, an explicit verified radical tower.
 *
 * Decision tree for certified-irreducible f:
 *   deg 1, 2          -> real roots are trivially in real RREs (quadratic formula)
 *   odd deg, >=2 real -> no real root is (a real-radical root must be the only
 *                        real root of an odd-degree irreducible)
 *   deg 3, 1 real     -> the real root is (real Cardano tower emitted)
 *   deg 4, 2 real     -> both are (resolvent-cubic tower emitted)
 *   deg 4, 4 real     -> all are iff the Galois group is a 2-group; A4/S4
 *                        splitting fields have non-2-power degree, so no root is
 *   deg 4, 0 real     -> nothing to classify
 *   anything else     -> unsupported (solvability testing beyond these shapes
 *                        is out of scope)
 */
#pragma once

#include "rre/galois_data.hpp"
#include "rre/irreducibility.hpp"
#include "rre/poly_text.hpp"
#include "rre/sturm.hpp"
#include "rre/tower.hpp"

namespace rre {

enum class TheoremTag {
    none,
    theorem_a,        // splitting-field degree must be a 2-power
    theorem_c,        // odd degree: a real-radical root is the only real root
    theorem_9_1,      // irreducible cubic with exactly one real root
    theorem_9_5,      // irreducible quartic with exactly two real roots
    corollary_3_4,    // Galois subfield of 2-power degree
    galois_two_group  // quartic with 2-group Galois group
};

inline std::string tag_name(TheoremTag t) {
    switch (t) {
        case TheoremTag::none: return "";
        case TheoremTag::theorem_a: return "TheoremA";
        case TheoremTag::theorem_c: return "TheoremC";
        case TheoremTag::theorem_9_1: return "Theorem9.1";
        case TheoremTag::theorem_9_5: return "Theorem9.5";
        case TheoremTag::corollary_3_4: return "Corollary3.4";
        case TheoremTag::galois_two_group: return "GaloisTwoGroup";
    }
    return "";
}

enum class RootStatus { in_real_rre, not_in_real_rre, unsupported };

inline std::string status_name(RootStatus s) {
    switch (s) {
        case RootStatus::in_real_rre: return "InRealRRE";
        case RootStatus::not_in_real_rre: return "NotInRealRRE";
        case RootStatus::unsupported: return "Unsupported";
    }
    return "";
}

struct RootVerdict {
    IsolatingInterval interval;
    RootStatus status = RootStatus::unsupported;
    TheoremTag tag = TheoremTag::none;
    std::optional<RadicalTower> tower;
    std::optional<TowerExpr> root_expr;
    bool tower_verified = false;
};

enum class Obstruction { present, absent };

struct Verdict {
    enum class Overall { classified, no_real_roots, unsupported };
    Overall overall = Overall::classified;
    unsigned ground_d = 0;  // 0 = Q
    Polynomial<QuadFieldElem> poly;
    IrreducibilityCertificate certificate;
    std::optional<QuadFieldElem> disc;
    size_t real_root_count = 0;
    std::vector<RootVerdict> roots;
    std::optional<GaloisGroupResult> galois;          // quartics over Q
    std::optional<Obstruction> obstruction;           // cubics: is disc of the form -3 m^2?
    std::optional<QuadFieldElem> obstruction_ratio;   // disc / (-3)
    bool casus_irreducibilis = false;                 // cubic with three real roots
    std::string unsupported_reason;

    std::string ground_name() const {
        return ground_d == 0 ? "Q" : "Q(sqrt(" + std::to_string(ground_d) + "))";
    }
};

struct ReducibleInputError : std::runtime_error {
    ReducibleInputError(std::string msg, Polynomial<QuadFieldElem> fac)
        : std::runtime_error(std::move(msg)), factor(std::move(fac)) {}
    Polynomial<QuadFieldElem> factor;
};

namespace detail {

inline QuadFieldElem qr(long num, long den = 1) { return QuadFieldElem(Rational(num, den)); }

/// Square root inside the ground field itself (d = 0 means Q).
inline std::optional<QuadFieldElem> sqrt_in_ground(const QuadFieldElem& x, unsigned d) {
    if (d == 0) {
        if (!x.is_rational()) throw FieldMismatch("sqrt_in_ground: irrational value over Q");
        if (auto r = rational_sqrt(x.as_rational())) return QuadFieldElem(*r);
        return std::nullopt;
    }
    return sqrt_in_field(x, d);
}

inline RatInterval interval_of(const IsolatingInterval& iv) {
    if (iv.hi_is_root) return RatInterval::point(iv.hi);
    return RatInterval(iv.lo, iv.hi);
}

/// Shrink an isolating interval of squarefree g below the target width.
inline RatInterval refine_root_interval(const Polynomial<QuadFieldElem>& g, const IsolatingInterval& iv,
                                        const Rational& width) {
    if (iv.hi_is_root) return RatInterval::point(iv.hi);
    Rational lo = iv.lo, hi = iv.hi;
    while (hi - lo > width) {
        Rational m = (lo + hi) / 2;
        QuadFieldElem gm = g.eval(QuadFieldElem(m));
        if (gm.is_zero()) return RatInterval::point(m);
        if (sign(g.eval(QuadFieldElem(lo))) == sign(gm))
            lo = m;
        else
            hi = m;
    }
    return RatInterval(lo, hi);
}

}  // namespace detail

/**
 * Necessary condition for the cubic field Q[alpha] itself to be a repeated
 * radical extension of a quasireal ground field: the discriminant must be
 * -3 m^2 with m in the ground field. `present` certifies the obstruction;
 * `absent` is inconclusive (the criterion is necessity only).
 */
inline Obstruction cubic_radical_obstruction(const Polynomial<QuadFieldElem>& f, unsigned d) {
    if (f.degree() != 3) throw std::invalid_argument("cubic_radical_obstruction: degree != 3");
    QuadFieldElem ratio = discriminant(f) / detail::qr(-3);
    return detail::sqrt_in_ground(ratio, d) ? Obstruction::absent : Obstruction::present;
}

struct CubicTower {
    RadicalTower tower;
    TowerExpr root;
};

/**
 * Real Cardano tower for an irreducible cubic with negative discriminant
 * (exactly one real root): depress to Y^3 + bY + c, adjoin
 * s = sqrt(c^2/4 + b^3/27) when it is not already in the ground field, then
 * the real cube root t of (-c/2 + s); the root is t - b/(3t) shifted back.
 */
inline CubicTower build_cubic_tower(const Polynomial<QuadFieldElem>& f, unsigned d) {
    if (f.degree() != 3) throw std::invalid_argument("build_cubic_tower: degree != 3");
    QuadFieldElem disc = discriminant(f);
    if (!(disc.sgn() < 0)) throw std::invalid_argument("build_cubic_tower: discriminant not negative");

    Polynomial<QuadFieldElem> m = f.monic();
    QuadFieldElem shift = m.coeff(2) / detail::qr(3);
    Polynomial<QuadFieldElem> g = m.shift_arg(-shift);  // g(Y) = m(Y - a2/3) = Y^3 + bY + c
    QuadFieldElem b = g.coeff(1), c = g.coeff(0);

    RadicalTower tower;
    TowerExpr root_y = TowerExpr::constant(QuadFieldElem(0));
    if (b.is_zero()) {
        // pure binomial: the real cube root of -c
        tower.steps.push_back({3, TowerExpr::constant(-c), true});
        root_y = TowerExpr::step(0);
    } else {
        QuadFieldElem r1 = c * c / detail::qr(4) + b * b * b / detail::qr(27);  // = -disc/108 > 0
        TowerExpr s = TowerExpr::constant(QuadFieldElem(0));
        if (auto sq = detail::sqrt_in_ground(r1, d)) {
            s = TowerExpr::constant(*sq);
        } else {
            tower.steps.push_back({2, TowerExpr::constant(r1), true});
            s = TowerExpr::step(tower.steps.size() - 1);
        }
        tower.steps.push_back({3, TowerExpr::constant(-c / detail::qr(2)) + s, true});
        TowerExpr t = TowerExpr::step(tower.steps.size() - 1);
        root_y = t - TowerExpr::constant(b / detail::qr(3)) / t;
    }
    return {std::move(tower), root_y - TowerExpr::constant(shift)};
}

namespace detail {

/// Pick the quadratic-formula branch whose enclosure matches the target
/// (product or sum of the two isolated real roots).
inline TowerExpr pick_branch(const RadicalTower& tower, const TowerExpr& plus, const TowerExpr& minus,
                             const Polynomial<QuadFieldElem>& f, const IsolatingInterval& a_iv,
                             const IsolatingInterval& b_iv, bool product) {
    Polynomial<QuadFieldElem> g = squarefree_part(f);
    for (unsigned bits = 40; bits <= 1280; bits *= 2) {
        Rational w(Int(1), Int(1) << bits);
        RatInterval ia = refine_root_interval(g, a_iv, w);
        RatInterval ib = refine_root_interval(g, b_iv, w);
        RatInterval target = product ? ia * ib : ia + ib;
        for (unsigned prec = 64; prec <= kTowerMaxPrecBits; prec *= 2) {
            RatInterval vp, vm;
            try {
                auto vals = evaluate_tower_steps(tower, prec);
                vp = plus.eval(vals, prec);
                vm = minus.eval(vals, prec);
            } catch (const TowerPrecisionError&) {
                continue;
            } catch (const IntervalDivByZero&) {
                continue;
            }
            bool op = vp.overlaps(target), om = vm.overlaps(target);
            if (op && !om) return plus;
            if (om && !op) return minus;
            break;  // both overlap at this precision: refine the target too
        }
    }
    throw TowerPrecisionError("quartic tower: could not separate the quadratic branches");
}

}  // namespace detail

struct QuarticTower {
    RadicalTower tower;
    TowerExpr root_low;   // smaller real root
    TowerExpr root_high;  // larger real root
    Polynomial<QuadFieldElem> resolvent;
    std::optional<QuadFieldElem> resolvent_root_in_ground;  // set when the resolvent is reducible
    bool resolvent_unique_real_root = false;  // set when the Cardano path was taken
};

/**
 * Tower for an irreducible quartic with exactly two real roots a < b (the
 * other two roots form a complex-conjugate pair). The resolvent cubic has
 * the real value ab+cd among its roots; adjoin it (directly when it lies in
 * the ground field, else via the Cardano tower after asserting it is the
 * unique real resolvent root), then ab and a+b by quadratic steps with the
 * branch chosen against the isolating intervals, and finally the roots from
 * Z^2 - (a+b)Z + ab.
 */
inline QuarticTower build_quartic_tower(const Polynomial<QuadFieldElem>& f, unsigned d) {
    if (f.degree() != 4) throw std::invalid_argument("build_quartic_tower: degree != 4");
    auto iso = isolate_real_roots(f);
    if (iso.intervals.size() != 2)
        throw std::invalid_argument("build_quartic_tower: need exactly two real roots");
    const IsolatingInterval& ivA = iso.intervals[0];
    const IsolatingInterval& ivB = iso.intervals[1];

    Polynomial<QuadFieldElem> m = f.monic();
    QuadFieldElem p = m.coeff(3), q = m.coeff(2), s0 = m.coeff(0);
    QuarticTower out{RadicalTower{}, TowerExpr::constant(QuadFieldElem(0)),
                     TowerExpr::constant(QuadFieldElem(0)), quartic_resolvent_cubic(m), std::nullopt,
                     false};

    // 1. the real resolvent root r = ab + cd; any ground-field root of the
    //    resolvent must be it, since the other two roots are nonreal
    TowerExpr r_expr = TowerExpr::constant(QuadFieldElem(0));
    bool r_exact = false;
    QuadFieldElem r_value;
    std::vector<QuadFieldElem> res_roots;
    if (d >= 2) {
        res_roots = roots_in_quad_field(out.resolvent, d);
    } else {
        auto rq = to_rational_poly(out.resolvent);
        for (const Rational& root : find_rational_roots(*rq)) res_roots.emplace_back(root);
    }
    if (!res_roots.empty()) {
        if (res_roots.size() > 1)
            throw std::logic_error("build_quartic_tower: several real resolvent roots in the ground field");
        r_value = res_roots.front();
        r_expr = TowerExpr::constant(r_value);
        r_exact = true;
        out.resolvent_root_in_ground = r_value;
    } else {
        if (count_real_roots(out.resolvent) != 1)
            throw std::logic_error(
                "build_quartic_tower: resolvent of a two-real-root quartic has three real roots");
        out.resolvent_unique_real_root = true;
        CubicTower ct = build_cubic_tower(out.resolvent, d);
        out.tower = std::move(ct.tower);
        r_expr = ct.root;
    }

    auto add_sqrt_step = [&out](const TowerExpr& rad) {
        out.tower.steps.push_back({2, rad, true});
        return TowerExpr::step(out.tower.steps.size() - 1);
    };
    const TowerExpr half = TowerExpr::constant(detail::qr(1, 2));

    // quadratic Z^2 - SZ + P with S, P expressions: pick the branch matching
    // the target (product = true: P-branch values ab vs cd; else sums).
    // Exact S folds the discriminant to a ground constant.
    auto quadratic_value = [&](const TowerExpr& S, const std::optional<QuadFieldElem>& S_exact,
                               const QuadFieldElem& P_const_part, const TowerExpr& disc_expr,
                               bool product) {
        if (S_exact) {
            QuadFieldElem v = *S_exact * *S_exact - detail::qr(4) * P_const_part;
            if (v.is_zero()) return TowerExpr::constant(*S_exact / detail::qr(2));
            if (auto sq = detail::sqrt_in_ground(v, d)) {
                TowerExpr w = TowerExpr::constant(*sq);
                return detail::pick_branch(out.tower, (S + w) * half, (S - w) * half, f, ivA, ivB, product);
            }
            TowerExpr w = add_sqrt_step(TowerExpr::constant(v));
            return detail::pick_branch(out.tower, (S + w) * half, (S - w) * half, f, ivA, ivB, product);
        }
        TowerExpr w = add_sqrt_step(disc_expr);
        return detail::pick_branch(out.tower, (S + w) * half, (S - w) * half, f, ivA, ivB, product);
    };

    // 2. ab from Z^2 - rZ + s0
    TowerExpr disc1 = r_expr * r_expr - TowerExpr::constant(detail::qr(4) * s0);
    TowerExpr ab_expr =
        quadratic_value(r_expr, r_exact ? std::optional<QuadFieldElem>(r_value) : std::nullopt, s0,
                        disc1, true);

    // 3. a+b from Z^2 + pZ + (q - r); the companion value is c+d
    TowerExpr minus_p = TowerExpr::constant(-p);
    TowerExpr disc2 =
        TowerExpr::constant(p * p - detail::qr(4) * q) + TowerExpr::constant(detail::qr(4)) * r_expr;
    TowerExpr sum_expr = TowerExpr::constant(QuadFieldElem(0));
    if (r_exact) {
        QuadFieldElem v = p * p - detail::qr(4) * q + detail::qr(4) * r_value;
        if (v.is_zero()) {
            sum_expr = TowerExpr::constant(-p / detail::qr(2));
        } else if (auto sq = detail::sqrt_in_ground(v, d)) {
            TowerExpr w = TowerExpr::constant(*sq);
            sum_expr = detail::pick_branch(out.tower, (minus_p + w) * half, (minus_p - w) * half, f, ivA,
                                           ivB, false);
        } else {
            TowerExpr w = add_sqrt_step(TowerExpr::constant(v));
            sum_expr = detail::pick_branch(out.tower, (minus_p + w) * half, (minus_p - w) * half, f, ivA,
                                           ivB, false);
        }
    } else {
        TowerExpr w = add_sqrt_step(disc2);
        sum_expr = detail::pick_branch(out.tower, (minus_p + w) * half, (minus_p - w) * half, f, ivA, ivB,
                                       false);
    }

    // 4. the roots from Z^2 - (a+b)Z + ab; (a-b)^2 > 0 for distinct reals,
    //    so this is always a genuine radical step
    TowerExpr disc3 = sum_expr * sum_expr - TowerExpr::constant(detail::qr(4)) * ab_expr;
    TowerExpr w3 = add_sqrt_step(disc3);
    out.root_low = (sum_expr - w3) * half;  // w3 >= 0: the minus branch is the smaller root
    out.root_high = (sum_expr + w3) * half;
    return out;
}

/**
 * Classify which real roots of f lie in real repeated radical extensions of
 * the ground field (d = 0 for Q). Rejects reducible inputs with the factor;
 * an Unknown irreducibility certificate yields an unsupported verdict.
 */
inline Verdict classify(const Polynomial<QuadFieldElem>& f, unsigned d) {
    for (const auto& c : f.coeffs())
        if (c.field_tag() != 0 && c.field_tag() != d)
            throw FieldMismatch("classify: coefficient outside the ground field");
    if (f.degree() < 1) throw std::invalid_argument("classify: degree < 1");

    Verdict v;
    v.ground_d = d;
    v.poly = f;

    if (d == 0) {
        auto fr = to_rational_poly(f);
        v.certificate = irreducibility_certificate(*fr);
        if (v.certificate.reducible()) v.certificate.factor_quad = to_quad_poly(v.certificate.factor);
    } else {
        v.certificate = quad_irreducibility(f, d);
    }
    if (v.certificate.reducible())
        throw ReducibleInputError(
            "classify: reducible input, factor " + poly_to_text(v.certificate.factor_quad),
            v.certificate.factor_quad);

    const long n = f.degree();
    auto iso = isolate_real_roots(f);
    v.real_root_count = iso.intervals.size();
    auto push_all = [&](RootStatus st, TheoremTag tag) {
        for (const auto& iv : iso.intervals)
            v.roots.push_back({iv, st, tag, std::nullopt, std::nullopt, false});
    };

    if (!v.certificate.irreducible()) {
        v.overall = Verdict::Overall::unsupported;
        v.unsupported_reason = "irreducibility undecided: " + v.certificate.describe();
        push_all(RootStatus::unsupported, TheoremTag::none);
        return v;
    }

    if (n >= 2) v.disc = discriminant(f);
    if (n == 3) {
        v.obstruction_ratio = *v.disc / detail::qr(-3);
        v.obstruction = cubic_radical_obstruction(f, d);
        v.casus_irreducibilis = v.real_root_count == 3;
    }

    if (v.real_root_count == 0) {
        v.overall = Verdict::Overall::no_real_roots;
        return v;
    }

    if (n == 1) {
        push_all(RootStatus::in_real_rre, TheoremTag::none);
        v.roots.front().tower = RadicalTower{};  // the root lies in the ground field
        v.roots.front().tower_verified = true;
        return v;
    }

    if (n == 2) {
        // irreducible quadratic with real roots: adjoin sqrt of the monic discriminant
        Polynomial<QuadFieldElem> m = f.monic();
        QuadFieldElem bb = m.coeff(1), cc = m.coeff(0);
        RadicalTower tower;
        tower.steps.push_back({2, TowerExpr::constant(bb * bb - detail::qr(4) * cc), true});
        TowerExpr w = TowerExpr::step(0);
        TowerExpr mb = TowerExpr::constant(-bb);
        const TowerExpr half = TowerExpr::constant(detail::qr(1, 2));
        push_all(RootStatus::in_real_rre, TheoremTag::corollary_3_4);
        TowerExpr exprs[2] = {(mb - w) * half, (mb + w) * half};
        for (int i = 0; i < 2; ++i) {
            v.roots[static_cast<size_t>(i)].tower = tower;
            v.roots[static_cast<size_t>(i)].root_expr = exprs[i];
            v.roots[static_cast<size_t>(i)].tower_verified =
                verify_tower_root(tower, exprs[i], f, detail::interval_of(iso.intervals[static_cast<size_t>(i)]));
        }
        return v;
    }

    if (n % 2 == 1 && v.real_root_count >= 2) {
        push_all(RootStatus::not_in_real_rre, TheoremTag::theorem_c);
        return v;
    }

    if (n == 3 && v.real_root_count == 1) {
        CubicTower ct = build_cubic_tower(f, d);
        bool ok = verify_tower_root(ct.tower, ct.root, f, detail::interval_of(iso.intervals[0]));
        if (!ok) throw std::logic_error("classify: cubic tower failed verification");
        v.roots.push_back({iso.intervals[0], RootStatus::in_real_rre, TheoremTag::theorem_9_1,
                           std::move(ct.tower), std::move(ct.root), true});
        return v;
    }

    if (n == 4 && v.real_root_count == 2) {
        QuarticTower qt = build_quartic_tower(f, d);
        bool ok_lo = verify_tower_root(qt.tower, qt.root_low, f, detail::interval_of(iso.intervals[0]));
        bool ok_hi = verify_tower_root(qt.tower, qt.root_high, f, detail::interval_of(iso.intervals[1]));
        if (!ok_lo || !ok_hi) throw std::logic_error("classify: quartic tower failed verification");
        v.roots.push_back({iso.intervals[0], RootStatus::in_real_rre, TheoremTag::theorem_9_5, qt.tower,
                           qt.root_low, true});
        v.roots.push_back({iso.intervals[1], RootStatus::in_real_rre, TheoremTag::theorem_9_5, qt.tower,
                           qt.root_high, true});
        return v;
    }

    if (n == 4 && v.real_root_count == 4 && d == 0) {
        auto fr = to_rational_poly(f);
        v.galois = galois_group_small_degree(*fr, v.certificate);
        if (is_two_group_label(v.galois->label)) {
            push_all(RootStatus::in_real_rre, TheoremTag::galois_two_group);
        } else {
            // A4/S4: the splitting field has degree 12 or 24, not a 2-power
            push_all(RootStatus::not_in_real_rre, TheoremTag::theorem_a);
        }
        return v;
    }

    v.overall = Verdict::Overall::unsupported;
    if (n % 2 == 1 && v.real_root_count == 1)
        v.unsupported_reason = "odd degree " + std::to_string(n) +
                               " with a single real root: solvability testing beyond cubics is out of scope";
    else
        v.unsupported_reason = "no supported classification for degree " + std::to_string(n) + " over " +
                               v.ground_name() + " with " + std::to_string(v.real_root_count) +
                               " real roots";
    push_all(RootStatus::unsupported, TheoremTag::none);
    return v;
}

inline Verdict classify(const Polynomial<Rational>& f) { return classify(to_quad_poly(f), 0); }

// ---------------------------------------------------------------------------
// worked sextic: (X^3 - 3X + 3)^2 - 3 over Q, factored over Q(sqrt(3))

struct SexticCaseStudy {
    Polynomial<Rational> sextic;
    IrreducibilityCertificate certificate;
    size_t real_root_count = 0;
    Polynomial<QuadFieldElem> factor_u, factor_v;  // u = +sqrt(3) branch, v = -sqrt(3)
    bool factorization_exact = false;
    bool u_criterion = false, v_criterion = false;  // -2 < a < 2 for the constant coefficient
    size_t u_real_roots = 0, v_real_roots = 0;
    Verdict u_verdict, v_verdict;
    size_t roots_in_rre = 0;
};

/**
 * Reproduces the worked sextic: Eisenstein-irreducible at 3, four real
 * roots, split over Q(sqrt(3)) into two cubics. The +sqrt(3) factor has one
 * real root, which lies in a real RRE of Q(sqrt(3)) and hence of Q (the
 * quadratic step sqrt(3) is itself a real radical); the -sqrt(3) factor has
 * three real roots, none of them expressible by real radicals.
 */
inline SexticCaseStudy analyze_sextic_case_study() {
    SexticCaseStudy cs;
    Polynomial<Rational> cubic{Rational(3), Rational(-3), Rational(0), Rational(1)};
    cs.sextic = cubic * cubic - Polynomial<Rational>::constant(Rational(3));
    cs.certificate = irreducibility_certificate(cs.sextic);
    cs.real_root_count = count_real_roots(cs.sextic);

    QuadFieldElem sqrt3 = QuadFieldElem::sqrt_d(3);
    Polynomial<QuadFieldElem> base = to_quad_poly(cubic);
    cs.factor_u = base + Polynomial<QuadFieldElem>::constant(sqrt3);
    cs.factor_v = base - Polynomial<QuadFieldElem>::constant(sqrt3);
    cs.factorization_exact = (cs.factor_u * cs.factor_v == to_quad_poly(cs.sextic));

    cs.u_criterion = cubic_three_root_criterion(QuadFieldElem(Rational(3), Rational(1), 3));
    cs.v_criterion = cubic_three_root_criterion(QuadFieldElem(Rational(3), Rational(-1), 3));
    cs.u_real_roots = count_real_roots(cs.factor_u);
    cs.v_real_roots = count_real_roots(cs.factor_v);

    cs.u_verdict = classify(cs.factor_u, 3);
    cs.v_verdict = classify(cs.factor_v, 3);
    for (const auto& r : cs.u_verdict.roots)
        if (r.status == RootStatus::in_real_rre) ++cs.roots_in_rre;
    for (const auto& r : cs.v_verdict.roots)
        if (r.status == RootStatus::in_real_rre) ++cs.roots_in_rre;
    return cs;
}

}  // namespace rre
