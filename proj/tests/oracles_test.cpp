#include <catch2/catch_amalgamated.hpp>

#include "rre/lemma_sweeps.hpp"
#include "test_support.hpp"

using namespace rre;

namespace {

Group klein() { return sweep_detail::klein_group(); }

}  // namespace

TEST_CASE("partition lemma oracle") {
    SECTION("Klein four-group on F_3^2") {
        Group g = klein();
        std::vector<Group> parts;
        for (const Group& h : all_subgroups(g))
            if (h.order() == 2) parts.push_back(h);
        REQUIRE(parts.size() == 3);
        auto act = sweep_detail::klein_action_f3();
        REQUIRE(oracle_partition_lemma(g, parts, act, 3));
    }
    SECTION("trivial action fixes everything") {
        Group g = klein();
        std::vector<Group> parts;
        for (const Group& h : all_subgroups(g))
            if (h.order() == 2) parts.push_back(h);
        std::vector<FpMat> id_mats(2, FpMat::identity(3, 2));
        auto act = make_module_action(g, id_mats, 3, 2);
        REQUIRE(oracle_partition_lemma(g, parts, act, 3));
    }
    SECTION("order-21 Frobenius group on F_2^3") {
        Group g = sweep_detail::frobenius21();
        auto parts_list = enumerate_partitions(g);
        REQUIRE(parts_list.size() == 1);  // kernel plus the seven complements
        REQUIRE(parts_list[0].size() == 8);
        auto act = sweep_detail::frobenius21_action_f8();
        REQUIRE(oracle_partition_lemma(g, parts_list[0], act, 2));
        // the kernel acts fixed-point-freely, so a complement carries the fixed points
        std::vector<FpMat> kernel_mats{act.mat_of(affine_perm(7, 1, 1))};
        REQUIRE(common_fixed_space(kernel_mats, 2, 3).empty());
    }
    SECTION("hypothesis violations are reported distinctly") {
        Group g = klein();
        std::vector<Group> parts;
        for (const Group& h : all_subgroups(g))
            if (h.order() == 2) parts.push_back(h);
        auto act = sweep_detail::klein_action_f3();
        // wrong witness order
        REQUIRE_THROWS_AS(oracle_partition_lemma(g, parts, act, 2), OracleError);
        // not a partition: drop one member
        std::vector<Group> bad(parts.begin(), parts.end() - 1);
        REQUIRE_THROWS_AS(oracle_partition_lemma(g, bad, act, 3), OracleError);
    }
}

TEST_CASE("fixed-point-free section oracle") {
    SECTION("trivial section") {
        Group c7 = Group::closure(7, {affine_perm(7, 1, 1)});
        Perm inv = affine_perm(7, 6, 0);
        REQUIRE(oracle_fpf_section(c7, Group::trivial(7), inv, c7, c7));
    }
    SECTION("inversion on C7 inside the order-42 Frobenius group") {
        Group c7 = Group::closure(7, {affine_perm(7, 1, 1)});
        Perm inv = affine_perm(7, 6, 0);
        REQUIRE(oracle_fpf_section(c7, Group::trivial(7), inv, c7, Group::trivial(7)));
    }
    SECTION("inversion on C9 inside D9") {
        std::vector<int> rot(9), refl(9);
        for (size_t x = 0; x < 9; ++x) {
            rot[x] = static_cast<int>((x + 1) % 9);
            refl[x] = static_cast<int>((9 - x) % 9);
        }
        Group c9 = Group::closure(9, {Perm(rot)});
        REQUIRE(oracle_fpf_section(c9, Group::trivial(9), Perm(refl), c9, Group::trivial(9)));
        // and on the C3 section
        Group c3 = Group::closure(9, {Perm(rot).pow(3)});
        REQUIRE(oracle_fpf_section(c9, Group::trivial(9), Perm(refl), c9, c3));
        REQUIRE(oracle_fpf_section(c9, Group::trivial(9), Perm(refl), c3, Group::trivial(9)));
    }
    SECTION("hypothesis failure: sigma with fixed points on the series") {
        // conjugation by a rotation is not fixed-point-free
        std::vector<int> rot(5);
        for (size_t x = 0; x < 5; ++x) rot[x] = static_cast<int>((x + 1) % 5);
        Group c5 = Group::closure(5, {Perm(rot)});
        REQUIRE_THROWS_AS(oracle_fpf_section(c5, Group::trivial(5), Perm(rot), c5, Group::trivial(5)),
                          OracleError);
    }
}

TEST_CASE("subnormality-preservation oracle") {
    Group c7 = Group::closure(7, {affine_perm(7, 1, 1)});
    Perm inv = affine_perm(7, 6, 0);
    REQUIRE(oracle_thm52(c7, Group::trivial(7), inv, c7));                  // R = N
    REQUIRE(oracle_thm52(c7, Group::trivial(7), inv, Group::trivial(7)));   // R = M

    SECTION("p = 3 on C7 via the order-21 Frobenius group") {
        Perm mult2 = affine_perm(7, 2, 0);
        REQUIRE(induced_aut_order(mult2, c7) == 3);
        REQUIRE(oracle_thm52(c7, Group::trivial(7), mult2, c7));
    }
    SECTION("exhaustive sweep over the catalog stays clean") {
        auto rep = sweep_fpf_oracles(24);
        INFO("failures: " << rep.failures);
        for (const auto& note : rep.failure_notes) INFO(note);
        REQUIRE(rep.failures == 0);
        REQUIRE(rep.instances > 500);
    }
}

TEST_CASE("one-dimensional module oracle") {
    SECTION("k = 1 scalar actions are trivially true") {
        FpMat m(7, 1);
        m.at(0, 0) = 3;
        auto g = sweep_detail::matrix_group_as_perms({m}, 7, 1, 100);
        REQUIRE(g.has_value());
        auto act = make_module_action(*g, {m}, 7, 1);
        REQUIRE(oracle_lemma82(*g, *g, 7, act));
    }
    SECTION("simplicity failures are hypothesis errors, not counterexamples") {
        // scalars + shift on F_2^2: the diagonal line is invariant
        FpMat scal = FpMat::identity(2, 2), shift(2, 2);
        shift.at(0, 1) = 1;
        shift.at(1, 0) = 1;
        auto v = sweep_detail::matrix_group_as_perms({scal, shift}, 2, 2, 100);
        auto u = sweep_detail::matrix_group_as_perms({scal}, 2, 2, 100);
        auto act = make_module_action(*v, {scal, shift}, 2, 2);
        REQUIRE_THROWS_AS(oracle_lemma82(*v, *u, 2, act), OracleError);
    }
    SECTION("randomized sweep finds no counterexample") {
        auto rep = sweep_lemma82(120, 99);
        INFO("failures: " << rep.failures);
        REQUIRE(rep.failures == 0);
        REQUIRE(rep.instances >= 10);
    }
}

TEST_CASE("module machinery") {
    SECTION("composition factors of a triangular action") {
        // upper triangular [[1,1],[0,1]] over F_3 with a scalar 2I
        FpMat uni = FpMat::identity(3, 2);
        uni.at(0, 1) = 1;
        FpMat scal(3, 2);
        scal.at(0, 0) = 2;
        scal.at(1, 1) = 2;
        auto factors = composition_factors({uni, scal}, 3, 2);
        REQUIRE(factors.size() == 2);
        REQUIRE(factors[0].dim == 1);
        REQUIRE(factors[1].dim == 1);
        REQUIRE(factors[0].scalars == std::vector<unsigned long>{1, 2});
        REQUIRE(factors[1].scalars == std::vector<unsigned long>{1, 2});
    }
    SECTION("simplicity of the F_8 multiplication module") {
        auto act = sweep_detail::frobenius21_action_f8();
        REQUIRE(module_is_simple(act.generator_mats(), 2, 3));
    }
}
