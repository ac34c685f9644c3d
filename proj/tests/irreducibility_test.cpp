#include <catch2/catch_amalgamated.hpp>

#include "rre/irreducibility.hpp"
#include "rre/poly_text.hpp"
#include "test_support.hpp"

using namespace rre;
using test_support::qpoly;
using test_support::Rng;

using QP = Polynomial<Rational>;

namespace {

// re-check an Eisenstein certificate from scratch
void recheck_eisenstein(const QP& f, long p, long shift) {
    QP g = primitive_integer_scaled(f).shift_arg(Rational(shift));
    for (long i = 0; i < g.degree(); ++i) REQUIRE(int_coeff(g, static_cast<size_t>(i)) % p == 0);
    REQUIRE(int_coeff(g, static_cast<size_t>(g.degree())) % p != 0);
    REQUIRE(int_coeff(g, 0) % (Int(p) * p) != 0);
}

}  // namespace

TEST_CASE("certificate cascade on the worked polynomials") {
    auto c1 = irreducibility_certificate(qpoly({2, -6, 0, 1}));
    REQUIRE(c1.irreducible());
    REQUIRE(c1.method == CertMethod::eisenstein);
    REQUIRE(c1.prime == 2);
    REQUIRE(c1.shift == 0);
    recheck_eisenstein(qpoly({2, -6, 0, 1}), c1.prime, c1.shift);

    QP cubic = qpoly({3, -3, 0, 1});
    QP sextic = cubic * cubic - QP::constant(Rational(3));
    auto c2 = irreducibility_certificate(sextic);
    REQUIRE(c2.irreducible());
    REQUIRE(c2.method == CertMethod::eisenstein);
    REQUIRE(c2.prime == 3);
    REQUIRE(c2.shift == 0);
    recheck_eisenstein(sextic, c2.prime, c2.shift);

    auto c3 = irreducibility_certificate(qpoly({-1, 0, 0, 0, 1}));  // x^4 - 1
    REQUIRE(c3.reducible());
    REQUIRE(divides(c3.factor, qpoly({-1, 0, 0, 0, 1})));
    REQUIRE(c3.factor.degree() >= 1);
    REQUIRE(c3.factor.degree() < 4);
}

TEST_CASE("certificates by method") {
    SECTION("shifted Eisenstein") {
        // Phi_3(x) = x^2 + x + 1; x -> x + 1 gives x^2 + 3x + 3
        auto c = irreducibility_certificate(qpoly({1, 1, 1}));
        REQUIRE(c.irreducible());
        REQUIRE(c.method == CertMethod::eisenstein);
        REQUIRE(c.prime == 3);
        REQUIRE(c.shift != 0);
        recheck_eisenstein(qpoly({1, 1, 1}), c.prime, c.shift);
    }
    SECTION("binomial criterion") {
        // x^5 - 432: every prime factor of 432 = 2^4 3^3 appears squared and
        // 432 = 2^5 mod 25, so no Eisenstein shift works; 432 is not a 5th
        // power, so the binomial rule certifies irreducibility
        auto c = irreducibility_certificate(qpoly({-432, 0, 0, 0, 0, 1}));
        REQUIRE(c.irreducible());
        REQUIRE(c.method == CertMethod::binomial_pth_power);
        REQUIRE(!is_pth_power(Rational(432), 5));
        // and plain x^5 - 4 is still irreducible, just via a shifted Eisenstein
        auto c2 = irreducibility_certificate(qpoly({-4, 0, 0, 0, 0, 1}));
        REQUIRE(c2.irreducible());
    }
    SECTION("mod-p with an independent recheck") {
        QP f = qpoly({-1, -1, 0, 0, 0, 1});  // x^5 - x - 1
        auto c = irreducibility_certificate(f);
        REQUIRE(c.irreducible());
        REQUIRE(c.method == CertMethod::mod_p_irreducible);
        // recheck: no factor of degree 1..2 divides f mod p
        unsigned long p = static_cast<unsigned long>(c.prime);
        auto red = detail::fp_reduce(primitive_integer_scaled(f), p);
        REQUIRE(red.size() == 6);
        for (unsigned long a = 0; a < p; ++a)
            for (unsigned long b = 0; b < p; ++b) {
                REQUIRE(!detail::fp_divides({a, 1}, red, p));
                REQUIRE(!detail::fp_divides({a, b, 1}, red, p));
            }
    }
    SECTION("quartic exhaustive") {
        auto c = irreducibility_certificate(qpoly({-1, -1, 0, 0, 1}));  // x^4 - x - 1
        REQUIRE(c.irreducible());
        REQUIRE(c.method == CertMethod::quartic_exhaustive);
        // x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2): no rational root, quadratic split
        auto c2 = irreducibility_certificate(qpoly({4, 0, 0, 0, 1}));
        REQUIRE(c2.reducible());
        REQUIRE(c2.factor.degree() == 2);
        REQUIRE(divides(c2.factor, qpoly({4, 0, 0, 0, 1})));
    }
    SECTION("degree <= 3 by root absence") {
        auto c = irreducibility_certificate(qpoly({1, 2, 0, 3}));
        if (c.method == CertMethod::no_root_deg_le3) {
            REQUIRE(find_rational_roots(qpoly({1, 2, 0, 3})).empty());
        }
        REQUIRE(c.irreducible());
    }
    SECTION("degree >= 5 reducible without rational roots stays unknown") {
        QP f = qpoly({1, 0, 1}) * qpoly({-2, 0, 0, 1});  // (x^2+1)(x^3-2)
        auto c = irreducibility_certificate(f);
        REQUIRE(c.status == CertStatus::unknown);
    }
}

TEST_CASE("reducible certificates carry exact factors") {
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        // build a product with a guaranteed rational root
        long root = rng.range(-6, 6);
        std::vector<Rational> rest;
        for (long i = 0, d = rng.range(1, 3); i <= d; ++i) rest.push_back(rng.rational(5, 3));
        QP g{std::move(rest)};
        if (g.is_zero() || g.degree() < 1) continue;
        QP f = qpoly({-root, 1}) * g;
        auto c = irreducibility_certificate(f);
        REQUIRE(c.reducible());
        REQUIRE(divides(c.factor, f));
        auto [q, r] = f.divmod(c.factor);
        REQUIRE(r.is_zero());
        REQUIRE(q.degree() + c.factor.degree() == f.degree());
    }
}

TEST_CASE("rational root finder is complete on constructed inputs") {
    REQUIRE(find_rational_roots(qpoly({-2, 0, 1})).empty());  // x^2 - 2
    // (2x - 5)(3x - 1)(x + 2)
    auto product = parse_poly_q("(2x - 5)(3x - 1)(x + 2)");
    REQUIRE(product == qpoly({10, -29, -5, 6}));
    auto roots = find_rational_roots(product);
    REQUIRE(roots == std::vector<Rational>{Rational(-2), Rational(1, 3), Rational(5, 2)});
    REQUIRE(find_rational_roots(qpoly({0, 0, 1, 1})) == std::vector<Rational>{Rational(-1), Rational(0)});
}

TEST_CASE("irreducibility over real quadratic fields") {
    auto u = parse_poly_quad("x^3 - 3x + 3 + sqrt(3)");
    auto cu = quad_irreducibility(u, 3);
    REQUIRE(cu.irreducible());

    // x^3 - (5 + 2 sqrt(2)) has the root... none in Q(sqrt(2)); but
    // x^2 - 2 sqrt(2) x + 2 = (x - sqrt(2))^2 is reducible
    auto sq = parse_poly_quad("x^2 - 2 sqrt(2) x + 2");
    auto csq = quad_irreducibility(sq, 2);
    REQUIRE(csq.reducible());
    REQUIRE(divides(csq.factor_quad, sq));

    // cubic with a root in Q(sqrt(2)): (x - sqrt(2)) (x^2 + 1) expanded
    auto g = parse_poly_quad("(x - sqrt(2)) * (x^2 + 1)");
    auto cg = quad_irreducibility(g, 2);
    REQUIRE(cg.reducible());
    REQUIRE(divides(cg.factor_quad, g));

    auto roots = roots_in_quad_field(g, 2);
    REQUIRE(roots.size() == 1);
    REQUIRE(roots[0] == QuadFieldElem::sqrt_d(2));

    // x^4 over a quadratic field is not decided
    auto quart = parse_poly_quad("x^4 - sqrt(2)");
    REQUIRE(quad_irreducibility(quart, 2).status == CertStatus::unknown);
}
