#include <catch2/catch_amalgamated.hpp>

#include "rre/classifier.hpp"
#include "test_support.hpp"

using namespace rre;
using test_support::qpoly;
using test_support::Rng;

using QP = Polynomial<Rational>;

namespace {

size_t count_status(const Verdict& v, RootStatus st) {
    size_t n = 0;
    for (const auto& r : v.roots)
        if (r.status == st) ++n;
    return n;
}

}  // namespace

TEST_CASE("classify the introductory cubic") {
    auto v = classify(qpoly({2, -6, 0, 1}));
    REQUIRE(v.certificate.method == CertMethod::eisenstein);
    REQUIRE(v.certificate.prime == 2);
    REQUIRE(v.real_root_count == 3);
    REQUIRE(v.roots.size() == 3);
    REQUIRE(count_status(v, RootStatus::not_in_real_rre) == 3);
    for (const auto& r : v.roots) REQUIRE(r.tag == TheoremTag::theorem_c);
    REQUIRE(v.casus_irreducibilis);
    REQUIRE(*v.obstruction == Obstruction::present);  // 756 / -3 = -252 < 0
}

TEST_CASE("classify the one-real-root cubic") {
    auto v = classify(qpoly({3, -3, 0, 1}));
    REQUIRE(v.real_root_count == 1);
    REQUIRE(v.roots[0].status == RootStatus::in_real_rre);
    REQUIRE(v.roots[0].tag == TheoremTag::theorem_9_1);
    REQUIRE(v.roots[0].tower_verified);
    REQUIRE(*v.disc == QuadFieldElem(-135));
    REQUIRE(*v.obstruction == Obstruction::present);  // 45 is not a rational square
    REQUIRE(*v.obstruction_ratio == QuadFieldElem(45));
    // the Cardano tower: sqrt(5/4) then a real cube root
    REQUIRE(v.roots[0].tower->steps.size() == 2);
    REQUIRE(v.roots[0].tower->steps[0].index == 2);
    REQUIRE(v.roots[0].tower->steps[1].index == 3);
}

TEST_CASE("cubic radical obstruction") {
    REQUIRE(cubic_radical_obstruction(to_quad_poly(qpoly({3, -3, 0, 1})), 0) == Obstruction::present);
    REQUIRE(cubic_radical_obstruction(to_quad_poly(qpoly({2, -6, 0, 1})), 0) == Obstruction::present);
    // pure binomials: disc = -27c^2 = -3 (3c)^2, always absent
    for (long c : {2, 3, 5, 7}) {
        QP f{std::vector<Rational>{Rational(-c), Rational(0), Rational(0), Rational(1)}};
        REQUIRE(cubic_radical_obstruction(to_quad_poly(f), 0) == Obstruction::absent);
    }
    REQUIRE_THROWS(cubic_radical_obstruction(to_quad_poly(qpoly({1, 0, 1})), 0));
}

TEST_CASE("cubic towers") {
    SECTION("binomial case collapses to a single cube root") {
        auto v = classify(qpoly({-2, 0, 0, 1}));
        REQUIRE(v.roots[0].tower->steps.size() == 1);
        REQUIRE(v.roots[0].tower->steps[0].index == 3);
        REQUIRE(v.roots[0].tower_verified);
    }
    SECTION("negative-discriminant family verifies numerically") {
        for (auto f : {qpoly({1, 1, 0, 1}), qpoly({5, -2, 0, 1}), qpoly({-7, 4, 1, 1})}) {
            if (discriminant(f) >= 0 || !irreducibility_certificate(f).irreducible()) continue;
            auto v = classify(f);
            REQUIRE(v.roots.size() == 1);
            REQUIRE(v.roots[0].tower_verified);
        }
    }
    SECTION("rejects nonnegative discriminants") {
        REQUIRE_THROWS(build_cubic_tower(to_quad_poly(qpoly({2, -6, 0, 1})), 0));
    }
}

TEST_CASE("quartic with exactly two real roots") {
    auto v = classify(qpoly({-1, -1, 0, 0, 1}));  // x^4 - x - 1
    REQUIRE(v.real_root_count == 2);
    for (const auto& r : v.roots) {
        REQUIRE(r.status == RootStatus::in_real_rre);
        REQUIRE(r.tag == TheoremTag::theorem_9_5);
        REQUIRE(r.tower_verified);
    }
    // resolvent is x^3 + 4x - 1 with a unique real root (disc = -283)
    QuarticTower qt = build_quartic_tower(to_quad_poly(qpoly({-1, -1, 0, 0, 1})), 0);
    REQUIRE(to_rational_poly(qt.resolvent) == qpoly({-1, 4, 0, 1}));
    REQUIRE(qt.resolvent_unique_real_root);
    REQUIRE(!qt.resolvent_root_in_ground);
    REQUIRE(discriminant(*to_rational_poly(qt.resolvent)) == -283);

    SECTION("reducible resolvent path: x^4 - 2") {
        QuarticTower t2 = build_quartic_tower(to_quad_poly(qpoly({-2, 0, 0, 0, 1})), 0);
        REQUIRE(t2.resolvent_root_in_ground.has_value());
        REQUIRE(*t2.resolvent_root_in_ground == QuadFieldElem(0));
        auto v2 = classify(qpoly({-2, 0, 0, 0, 1}));
        REQUIRE(v2.roots[0].tower_verified);
        REQUIRE(v2.roots[1].tower_verified);
    }
    SECTION("precondition violations") {
        REQUIRE_THROWS(build_quartic_tower(to_quad_poly(qpoly({1, 0, 0, 0, 1})), 0));  // 0 real roots
    }
}

TEST_CASE("quartics with four real roots split by Galois group") {
    // x^4 - 4x^2 + 1: V4 (biquadratic, sqrt(2+sqrt(3)) family), 4 real roots
    auto v = classify(qpoly({1, 0, -4, 0, 1}));
    REQUIRE(v.real_root_count == 4);
    REQUIRE(v.galois);
    REQUIRE(is_two_group_label(v.galois->label));
    REQUIRE(count_status(v, RootStatus::in_real_rre) == 4);
    for (const auto& r : v.roots) REQUIRE(r.tag == TheoremTag::galois_two_group);

    // x^4 - 4x^2 - x + 1: check the group first, then the verdict agrees
    QP f = qpoly({1, -1, -4, 0, 1});
    auto cert = irreducibility_certificate(f);
    if (cert.irreducible() && count_real_roots(f) == 4) {
        auto g = galois_group_small_degree(f, cert);
        auto v2 = classify(f);
        if (is_two_group_label(g.label))
            REQUIRE(count_status(v2, RootStatus::in_real_rre) == 4);
        else
            REQUIRE(count_status(v2, RootStatus::not_in_real_rre) == 4);
        for (const auto& r : v2.roots)
            REQUIRE(r.tag == (is_two_group_label(g.label) ? TheoremTag::galois_two_group
                                                          : TheoremTag::theorem_a));
    }
}

TEST_CASE("degree edge cases") {
    auto lin = classify(qpoly({-3, 2}));
    REQUIRE(lin.real_root_count == 1);
    REQUIRE(lin.roots[0].status == RootStatus::in_real_rre);

    auto quad = classify(qpoly({-2, 0, 1}));
    REQUIRE(quad.real_root_count == 2);
    REQUIRE(count_status(quad, RootStatus::in_real_rre) == 2);
    REQUIRE(quad.roots[0].tower_verified);
    REQUIRE(quad.roots[0].tag == TheoremTag::corollary_3_4);

    auto none = classify(qpoly({1, 0, 1}));
    REQUIRE(none.overall == Verdict::Overall::no_real_roots);
    REQUIRE(none.roots.empty());

    auto quint = classify(qpoly({-1, -1, 0, 0, 0, 1}));  // one real root
    REQUIRE(quint.overall == Verdict::Overall::unsupported);
    REQUIRE(count_status(quint, RootStatus::unsupported) == 1);

    auto quint3 = classify(qpoly({2, -4, 0, 0, 0, 1}));  // x^5 - 4x + 2: three real roots
    REQUIRE(quint3.real_root_count == 3);
    REQUIRE(count_status(quint3, RootStatus::not_in_real_rre) == 3);

    REQUIRE_THROWS_AS(classify(qpoly({-1, 0, 0, 0, 1})), ReducibleInputError);
}

TEST_CASE("verdicts cover exactly the real roots") {
    Rng rng(616);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> c;
        long d = rng.range(1, 4);
        for (long i = 0; i <= d; ++i) c.push_back(rng.rational(6, 2));
        QP f{std::move(c)};
        if (f.is_zero() || f.degree() < 1) continue;
        try {
            auto v = classify(f);
            REQUIRE(v.roots.size() == v.real_root_count);
            REQUIRE(v.real_root_count == count_real_roots(f));
        } catch (const ReducibleInputError&) {
            // fine: reducible inputs are rejected by contract
        }
    }
}

TEST_CASE("classification is stable under scaling and shifting") {
    QP f = qpoly({3, -3, 0, 1});
    auto base = classify(f);
    auto scaled = classify(f * Rational(7, 5));
    REQUIRE(scaled.real_root_count == base.real_root_count);
    REQUIRE(scaled.roots[0].status == base.roots[0].status);
    REQUIRE(scaled.roots[0].tag == base.roots[0].tag);

    // shift x -> x + 2: statuses map along the shift
    QP shifted = f.shift_arg(Rational(2));
    auto sh = classify(shifted);
    REQUIRE(sh.real_root_count == base.real_root_count);
    REQUIRE(sh.roots[0].status == base.roots[0].status);
    // the isolating interval moves by -2
    REQUIRE(sh.roots[0].interval.hi <= base.roots[0].interval.hi - 2 + Rational(1, 1000));
}

TEST_CASE("tower normalization") {
    SECTION("index 4 splits into two square roots") {
        RadicalTower t;
        t.steps.push_back({4, TowerExpr::constant(QuadFieldElem(2)), true});
        auto n = normalize_tower(t);
        REQUIRE(n.steps.size() == 2);
        REQUIRE(n.steps[0].index == 2);
        REQUIRE(n.steps[1].index == 2);
        // value preserved: the final step encloses 2^(1/4)
        auto vals = evaluate_tower_steps(n, 64);
        RatInterval quad = vals.back() * vals.back() * vals.back() * vals.back();
        REQUIRE(quad.contains(Rational(2)));
    }
    SECTION("all-prime towers are unchanged") {
        auto v = classify(qpoly({3, -3, 0, 1}));
        const RadicalTower& t = *v.roots[0].tower;
        auto n = normalize_tower(t);
        REQUIRE(n.steps.size() == t.steps.size());
        auto n2 = normalize_tower(n);
        REQUIRE(n2.steps.size() == n.steps.size());  // idempotent
    }
    SECTION("index 6 splits into 2 then 3") {
        RadicalTower t;
        t.steps.push_back({6, TowerExpr::constant(QuadFieldElem(5)), true});
        auto n = normalize_tower(t);
        REQUIRE(n.steps.size() == 2);
        REQUIRE(n.steps[0].index == 2);
        REQUIRE(n.steps[1].index == 3);
        auto vals = evaluate_tower_steps(n, 64);
        RatInterval sixth = vals.back();
        RatInterval acc = RatInterval::point(Rational(1));
        for (int i = 0; i < 6; ++i) acc = acc * sixth;
        REQUIRE(acc.contains(Rational(5)));
    }
    SECTION("emitted towers survive normalization and still verify") {
        auto v = classify(qpoly({-1, -1, 0, 0, 1}));
        for (const auto& r : v.roots) {
            auto n = normalize_tower(*r.tower);
            for (const auto& s : n.steps) REQUIRE(is_prime_index_u(s.index));
            // all indices were already prime, so step positions are unchanged
            REQUIRE(n.steps.size() == r.tower->steps.size());
            REQUIRE(verify_tower_root(n, *r.root_expr, to_quad_poly(qpoly({-1, -1, 0, 0, 1})),
                                      detail::interval_of(r.interval)));
        }
    }
}

TEST_CASE("classification over a real quadratic field") {
    auto u = parse_poly_quad("x^3 - 3x + 3 + sqrt(3)");
    auto vu = classify(u, 3);
    REQUIRE(vu.real_root_count == 1);
    REQUIRE(vu.roots[0].status == RootStatus::in_real_rre);
    REQUIRE(vu.roots[0].tower_verified);

    auto v = parse_poly_quad("x^3 - 3x + 3 - sqrt(3)");
    auto vv = classify(v, 3);
    REQUIRE(vv.real_root_count == 3);
    REQUIRE(count_status(vv, RootStatus::not_in_real_rre) == 3);

    // reducible over the quadratic field
    auto red = parse_poly_quad("(x - sqrt(2)) * (x^2 + 1)");
    REQUIRE_THROWS_AS(classify(red, 2), ReducibleInputError);

    // quartic over the quadratic field is undecided -> unsupported
    auto quart = parse_poly_quad("x^4 - sqrt(2)");
    REQUIRE(classify(quart, 2).overall == Verdict::Overall::unsupported);
}

TEST_CASE("sextic case study") {
    auto cs = analyze_sextic_case_study();
    REQUIRE(cs.certificate.method == CertMethod::eisenstein);
    REQUIRE(cs.certificate.prime == 3);
    REQUIRE(cs.real_root_count == 4);
    REQUIRE(cs.factorization_exact);
    REQUIRE(!cs.u_criterion);
    REQUIRE(cs.v_criterion);
    REQUIRE(cs.u_real_roots == 1);
    REQUIRE(cs.v_real_roots == 3);
    REQUIRE(cs.roots_in_rre == 1);
    REQUIRE(cs.u_verdict.roots[0].status == RootStatus::in_real_rre);
    REQUIRE(cs.u_verdict.roots[0].tower_verified);
    for (const auto& r : cs.v_verdict.roots) REQUIRE(r.status == RootStatus::not_in_real_rre);
}
