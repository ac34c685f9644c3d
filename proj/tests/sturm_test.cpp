#include <catch2/catch_amalgamated.hpp>

#include "rre/poly_text.hpp"
#include "rre/sturm.hpp"
#include "test_support.hpp"

using namespace rre;
using test_support::qpoly;
using test_support::Rng;

using QP = Polynomial<Rational>;

TEST_CASE("sturm chains") {
    auto c1 = sturm_chain(qpoly({-2, 0, 1}));
    REQUIRE(c1.size() == 3);
    REQUIRE(c1[1] == qpoly({0, 2}));
    REQUIRE(c1[2].degree() == 0);

    auto c2 = sturm_chain(qpoly({-1, 1}));
    REQUIRE(c2.size() == 2);

    auto c3 = sturm_chain(qpoly({3, -3, 0, 1}));
    REQUIRE(c3.size() == 4);
    REQUIRE(c3.back().degree() == 0);
    REQUIRE(!c3.back().is_zero());

    REQUIRE_THROWS(sturm_chain(QP{}));
    REQUIRE_THROWS(sturm_chain(qpoly({1, -2, 1})));  // not squarefree
}

TEST_CASE("real root counts match the worked examples") {
    REQUIRE(count_real_roots(qpoly({2, -6, 0, 1})) == 3);
    REQUIRE(count_real_roots(qpoly({3, -3, 0, 1})) == 1);
    QP cubic = qpoly({3, -3, 0, 1});
    REQUIRE(count_real_roots(cubic * cubic - QP::constant(Rational(3))) == 4);
    REQUIRE(count_real_roots(qpoly({1, 0, 1})) == 0);

    SECTION("bounded counts and endpoint conventions") {
        QP f = qpoly({0, -1, 0, 1});  // x^3 - x: roots -1, 0, 1
        REQUIRE(count_real_roots(f, Rational(-2), Rational(2)) == 3);
        REQUIRE(count_real_roots(f, Rational(0), Rational(2)) == 1);   // (0, 2]
        REQUIRE(count_real_roots(f, Rational(-1), Rational(0)) == 1);  // (-1, 0] counts 0
        REQUIRE(count_real_roots(f, Rational(-1), Rational(1)) == 2);  // excludes -1, includes 1
        REQUIRE(count_real_roots(f, std::nullopt, Rational(0)) == 2);
        REQUIRE(count_real_roots(f, Rational(0), std::nullopt) == 1);
        REQUIRE_THROWS(count_real_roots(f, Rational(1), Rational(1)));
    }

    SECTION("multiplicities are reduced and flagged") {
        QP f = qpoly({-1, 1}) * qpoly({-1, 1}) * qpoly({1, 1});
        auto res = count_real_roots_detail(f, std::nullopt, std::nullopt);
        REQUIRE(res.count == 2);
        REQUIRE(res.reduced_multiplicity);
    }
}

TEST_CASE("isolation agrees with counting") {
    auto iso = isolate_real_roots(qpoly({3, -3, 0, 1}));
    REQUIRE(iso.intervals.size() == 1);
    REQUIRE(iso.intervals[0].lo >= -3);
    REQUIRE(iso.intervals[0].hi <= -2);

    auto iso2 = isolate_real_roots(qpoly({-2, 0, 1}));
    REQUIRE(iso2.intervals.size() == 2);
    REQUIRE(isolate_real_roots(qpoly({1, 0, 1})).intervals.empty());

    SECTION("properties over a corpus") {
        Rng rng(404);
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<Rational> c;
            long d = rng.range(1, 8);
            for (long i = 0; i <= d; ++i) c.push_back(rng.rational(8, 3));
            QP f{std::move(c)};
            if (f.is_zero() || f.degree() < 1) continue;
            auto res = isolate_real_roots(f);
            REQUIRE(res.intervals.size() == count_real_roots(f));
            QP g = res.squarefree;
            for (size_t i = 0; i < res.intervals.size(); ++i) {
                const auto& iv = res.intervals[i];
                REQUIRE(iv.lo < iv.hi);
                REQUIRE(iv.width() <= default_isolation_width());
                if (iv.hi_is_root)
                    REQUIRE(g.eval(iv.hi) == 0);
                else
                    REQUIRE(sign(g.eval(iv.lo)) * sign(g.eval(iv.hi)) == -1);
                if (i > 0) REQUIRE(res.intervals[i - 1].hi <= iv.lo);
                REQUIRE(count_real_roots(f, iv.lo, iv.hi) == 1);
            }
        }
    }

    SECTION("rational roots land on exact endpoints") {
        auto res = isolate_real_roots(qpoly({0, -1, 0, 1}));  // roots -1, 0, 1
        REQUIRE(res.intervals.size() == 3);
        size_t exact = 0;
        for (const auto& iv : res.intervals)
            if (iv.hi_is_root) ++exact;
        REQUIRE(exact >= 1);  // 0 is hit by the first bisection at the midpoint
    }
}

TEST_CASE("counts are scale invariant") {
    Rng rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> c;
        long d = rng.range(1, 6);
        for (long i = 0; i <= d; ++i) c.push_back(rng.rational(7, 3));
        QP f{std::move(c)};
        if (f.is_zero() || f.degree() < 1) continue;
        Rational scale(rng.range(1, 9), rng.range(1, 9));
        REQUIRE(count_real_roots(f) == count_real_roots(f * scale));
    }
}

TEST_CASE("cubic root count against the discriminant sign") {
    Rng rng(13);
    for (int trial = 0; trial < 80; ++trial) {
        Rational b = rng.rational(9, 4), c = rng.rational(9, 4);
        QP f{std::vector<Rational>{c, b, Rational(0), Rational(1)}};
        Rational disc = discriminant(f);
        if (disc == 0) continue;
        size_t n = count_real_roots(f);
        REQUIRE(n == (disc > 0 ? 3u : 1u));
    }
}

TEST_CASE("three-root criterion for x^3 - 3x + a") {
    REQUIRE(cubic_three_root_criterion(QuadFieldElem(Rational(3), Rational(-1), 3)));   // 3 - sqrt 3
    REQUIRE(!cubic_three_root_criterion(QuadFieldElem(Rational(3), Rational(1), 3)));   // 3 + sqrt 3
    REQUIRE(cubic_three_root_criterion(Rational(0)));

    SECTION("criterion matches the Sturm count over Q") {
        for (long den = 1; den <= 4; ++den) {
            for (long num = -4 * den; num <= 4 * den; ++num) {
                Rational a(num, den);
                QP f{std::vector<Rational>{a, Rational(-3), Rational(0), Rational(1)}};
                if (discriminant(f) == 0) continue;  // a = +-2 (double roots)
                REQUIRE(cubic_three_root_criterion(a) == (count_real_roots(f) == 3));
            }
        }
    }

    SECTION("criterion matches the Sturm count over Q(sqrt(2))") {
        Rng rng(555);
        for (int trial = 0; trial < 30; ++trial) {
            QuadFieldElem a(rng.rational(3, 2), rng.rational(2, 3), 2);
            Polynomial<QuadFieldElem> f{
                std::vector<QuadFieldElem>{a, QuadFieldElem(-3), QuadFieldElem(0), QuadFieldElem(1)}};
            if (discriminant(f).is_zero()) continue;
            REQUIRE(cubic_three_root_criterion(a) == (count_real_roots(f) == 3));
        }
    }
}

TEST_CASE("counting over a quadratic field") {
    auto u = parse_poly_quad("x^3 - 3x + 3 + sqrt(3)");
    auto v = parse_poly_quad("x^3 - 3x + 3 - sqrt(3)");
    REQUIRE(count_real_roots(u) == 1);
    REQUIRE(count_real_roots(v) == 3);
    auto iso = isolate_real_roots(v);
    REQUIRE(iso.intervals.size() == 3);
}
