/**
 * @file lemma_sweeps.hpp
 * @brief Documented instance generators and sweep drivers for the group
 *        oracles. Any oracle returning false (or an unexpected hypothesis
 *        failure) is recorded as a sweep failure; a clean sweep reports zero.
 *
 * Instance catalogs:
 *  - partition sweep: every partition (into >= 2 proper subgroups) of the
 *    Klein four-group acting faithfully on F_3^2 and of the order-21
 *    Frobenius group acting on F_2^3 (= F_8 with multiplication and the
 *    squaring map);
 *  - fixed-point-free sweeps: all subgroups N (order <= max_order) of the
 *    ambient catalog {S4, D3..D12, AGL(1,5), AGL(1,7), F21}, all conjugators
 *    inducing a prime-order automorphism, all invariant subnormal M with a
 *    fixed-point-free invariant series, then every section / intermediate;
 *  - module sweep: scalar and shift constructions plus seeded random matrix
 *    groups over F_p (p in {2,3,5,7}, dim <= 3, |V| <= 100).
 */
#pragma once

#include <functional>

#include "rre/galois_data.hpp"
#include "rre/group_oracles.hpp"

namespace rre {

struct SweepReport {
    std::string name;
    size_t instances = 0;         // hypothesis-passing oracle calls
    size_t hypothesis_skipped = 0;  // generated but filtered by hypotheses
    size_t failures = 0;
    std::vector<std::string> failure_notes;

    void fail(const std::string& note) {
        ++failures;
        if (failure_notes.size() < 20) failure_notes.push_back(note);
    }
};

/// All partitions of G into at least two nontrivial proper subgroups.
inline std::vector<std::vector<Group>> enumerate_partitions(const Group& g) {
    std::vector<Group> members;
    for (const Group& h : all_subgroups(g))
        if (h.order() > 1 && h.order() < g.order()) members.push_back(h);

    std::vector<std::vector<Group>> out;
    std::vector<size_t> chosen;
    std::set<Perm> covered;
    std::function<void()> rec = [&]() {
        // smallest uncovered nonidentity element
        const Perm* next = nullptr;
        for (const Perm& x : g.elements()) {
            if (x.is_identity() || covered.count(x)) continue;
            next = &x;
            break;
        }
        if (!next) {
            if (chosen.size() >= 2) {
                std::vector<Group> part;
                for (size_t i : chosen) part.push_back(members[i]);
                out.push_back(std::move(part));
            }
            return;
        }
        size_t lowest = chosen.empty() ? 0 : chosen.back() + 1;
        for (size_t i = lowest; i < members.size(); ++i) {
            const Group& h = members[i];
            if (!h.contains(*next)) continue;
            bool disjoint = true;
            for (const Perm& x : h.elements())
                if (!x.is_identity() && covered.count(x)) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            chosen.push_back(i);
            for (const Perm& x : h.elements())
                if (!x.is_identity()) covered.insert(x);
            rec();
            for (const Perm& x : h.elements())
                if (!x.is_identity()) covered.erase(x);
            chosen.pop_back();
        }
    };
    rec();
    return out;
}

namespace sweep_detail {

inline Group klein_group() {
    return Group::closure(4, {parse_perm("(0 1)(2 3)", 4), parse_perm("(0 2)(1 3)", 4)});
}

inline ModuleAction klein_action_f3() {
    FpMat m1(3, 2), m2(3, 2);
    m1.at(0, 0) = 2;  // diag(-1, 1)
    m1.at(1, 1) = 1;
    m2.at(0, 0) = 1;  // diag(1, -1)
    m2.at(1, 1) = 2;
    return make_module_action(klein_group(), {m1, m2}, 3, 2);
}

inline Group frobenius21() {
    return Group::closure(7, {affine_perm(7, 1, 1), affine_perm(7, 2, 0)});
}

/// F_8 = F_2[y]/(y^3+y+1) as F_2^3: translation gen acts as multiplication
/// by y, the order-3 gen as the squaring (Frobenius) map.
inline ModuleAction frobenius21_action_f8() {
    FpMat my(2, 3), mf(2, 3);
    // mult by y: 1 -> y, y -> y^2, y^2 -> y^3 = y + 1
    my.at(0, 1) = 1;
    my.at(1, 2) = 1;
    my.at(2, 0) = 1;
    my.at(2, 1) = 1;
    // squaring: 1 -> 1, y -> y^2, y^2 -> y^4 = y^2 + y
    mf.at(0, 0) = 1;
    mf.at(1, 2) = 1;
    mf.at(2, 1) = 1;
    mf.at(2, 2) = 1;
    return make_module_action(frobenius21(), {my, mf}, 2, 3);
}

inline std::vector<Group> ambient_catalog() {
    std::vector<Group> out;
    out.push_back(Group::closure(4, {parse_perm("(0 1 2 3)", 4), parse_perm("(0 1)", 4)}));  // S4
    for (size_t n = 3; n <= 12; ++n) {
        std::vector<int> rot(n), refl(n);
        for (size_t x = 0; x < n; ++x) {
            rot[x] = static_cast<int>((x + 1) % n);
            refl[x] = static_cast<int>((n - x) % n);
        }
        out.push_back(Group::closure(n, {Perm(rot), Perm(refl)}));  // D_n
    }
    out.push_back(Group::closure(5, {affine_perm(5, 1, 1), affine_perm(5, 2, 0)}));  // AGL(1,5)
    out.push_back(Group::closure(7, {affine_perm(7, 1, 1), affine_perm(7, 3, 0)}));  // AGL(1,7)
    out.push_back(frobenius21());
    return out;
}

}  // namespace sweep_detail

inline SweepReport sweep_partition_lemma() {
    SweepReport rep;
    rep.name = "partition-fixed-point";
    struct Case {
        Group g;
        ModuleAction act;
        unsigned long order;
    };
    std::vector<Case> cases;
    cases.push_back({sweep_detail::klein_group(), sweep_detail::klein_action_f3(), 3});
    cases.push_back({sweep_detail::frobenius21(), sweep_detail::frobenius21_action_f8(), 2});
    for (const Case& c : cases) {
        for (const auto& part : enumerate_partitions(c.g)) {
            if ((part.size() - 1) % c.order == 0) {
                ++rep.hypothesis_skipped;  // no witness element order
                continue;
            }
            ++rep.instances;
            try {
                if (!oracle_partition_lemma(c.g, part, c.act, c.order))
                    rep.fail("partition of order-" + std::to_string(c.g.order()) +
                             " group with no fixed points");
            } catch (const OracleError& e) {
                rep.fail(std::string("unexpected hypothesis error: ") + e.what());
            }
        }
    }
    return rep;
}

/**
 * Joint sweep for the section lemma and the subnormality theorem over the
 * ambient catalog; checks every sigma-invariant section R/S and every
 * intermediate subgroup R for every hypothesis-passing (N, M, sigma).
 */
inline SweepReport sweep_fpf_oracles(size_t max_order = 24) {
    SweepReport rep;
    rep.name = "fixed-point-free sections and subnormality";
    for (const Group& ambient : sweep_detail::ambient_catalog()) {
        for (const Group& n : all_subgroups(ambient)) {
            if (n.order() < 2 || n.order() > max_order) continue;
            // conjugators inducing a prime-order automorphism of N
            std::vector<Perm> sigmas;
            for (const Perm& t : ambient.elements()) {
                if (!normalizes(t, n) || centralizes(t, n)) continue;
                sigmas.push_back(t);
            }
            for (const Perm& sigma : sigmas) {
                size_t p = induced_aut_order(sigma, n);
                if (!is_prime_index(p)) continue;
                for (const Group& m : all_subgroups(n)) {
                    if (conjugate_subgroup(m, sigma) != m) continue;
                    if (!is_subnormal_in(m, n)) continue;
                    if (!fpf_on_canonical_series(m, n, sigma)) {
                        ++rep.hypothesis_skipped;
                        continue;
                    }
                    auto between = subgroups_between(m, n);
                    // section lemma on every sigma-invariant section
                    for (const Group& s : between) {
                        if (conjugate_subgroup(s, sigma) != s) continue;
                        for (const Group& r : between) {
                            if (!s.is_subgroup_of(r)) continue;
                            if (conjugate_subgroup(r, sigma) != r) continue;
                            if (!is_normal_in(s, r)) continue;
                            ++rep.instances;
                            try {
                                if (!oracle_fpf_section(n, m, sigma, r, s))
                                    rep.fail("fixed point on a section, |N|=" +
                                             std::to_string(n.order()) + " |M|=" + std::to_string(m.order()));
                            } catch (const OracleError& e) {
                                rep.fail(std::string("section oracle hypothesis error: ") + e.what());
                            }
                        }
                    }
                    // subnormality theorem on every intermediate
                    for (const Group& r : between) {
                        if (p > 2 && conjugate_subgroup(r, sigma) != r) continue;
                        ++rep.instances;
                        try {
                            if (!oracle_thm52(n, m, sigma, r))
                                rep.fail("intermediate not subnormal/invariant, |N|=" +
                                         std::to_string(n.order()) + " |R|=" + std::to_string(r.order()));
                        } catch (const OracleError& e) {
                            rep.fail(std::string("thm52 oracle hypothesis error: ") + e.what());
                        }
                    }
                }
            }
        }
    }
    return rep;
}

namespace sweep_detail {

/// Permutation representation of a matrix group acting on the vectors of F_p^k.
inline std::optional<Group> matrix_group_as_perms(const std::vector<FpMat>& gens, unsigned long p,
                                                  size_t k, size_t cap) {
    size_t points = 1;
    for (size_t i = 0; i < k; ++i) points *= p;
    auto index_of = [&](const FpVec& v) {
        size_t idx = 0, mult = 1;
        for (size_t i = 0; i < k; ++i) {
            idx += static_cast<size_t>(v[i]) * mult;
            mult *= p;
        }
        return idx;
    };
    std::vector<Perm> perm_gens;
    for (const FpMat& m : gens) {
        std::vector<int> img(points);
        FpVec v(k, 0);
        for (size_t idx = 0;; ++idx) {
            img[index_of(v)] = static_cast<int>(index_of(m.apply(v)));
            size_t i = 0;
            while (i < k) {
                if (++v[i] < p) break;
                v[i] = 0;
                ++i;
            }
            if (i == k) break;
        }
        perm_gens.emplace_back(std::move(img));
    }
    try {
        return Group::closure(points, perm_gens, cap);
    } catch (const CapExceeded&) {
        return std::nullopt;
    }
}

struct Xorshift {
    unsigned long long s;
    explicit Xorshift(unsigned long long seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    unsigned long long next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    unsigned long below(unsigned long n) { return static_cast<unsigned long>(next() % n); }
};

}  // namespace sweep_detail

/**
 * Module-lemma sweep: deterministic scalar/shift constructions plus seeded
 * random matrix groups. Instances failing the (exhaustively verified)
 * hypotheses are skipped and counted; every hypothesis-passing instance must
 * report dimension 1.
 */
inline SweepReport sweep_lemma82(size_t random_instances = 150, unsigned long long seed = 20240817) {
    SweepReport rep;
    rep.name = "one-dimensional module lemma";
    sweep_detail::Xorshift rng(seed);

    auto try_instance = [&rep](const std::vector<FpMat>& v_gens, const std::vector<size_t>& u_gen_idx,
                               unsigned long p, size_t k) {
        auto vg = sweep_detail::matrix_group_as_perms(v_gens, p, k, 100);
        if (!vg) {
            ++rep.hypothesis_skipped;
            return;
        }
        // U generated by a subset of V's generators (same perm degree)
        std::vector<Perm> u_perm_gens;
        std::vector<FpMat> u_gens;
        for (size_t i : u_gen_idx) u_gens.push_back(v_gens[i]);
        auto ug_perms = sweep_detail::matrix_group_as_perms(u_gens, p, k, 100);
        if (!ug_perms) {
            ++rep.hypothesis_skipped;
            return;
        }
        try {
            ModuleAction act = make_module_action(*vg, v_gens, p, k);
            if (!oracle_lemma82(*vg, *ug_perms, p, act))
                rep.fail("hypotheses held but dim = " + std::to_string(k) + " over p = " + std::to_string(p));
            ++rep.instances;
        } catch (const OracleError&) {
            ++rep.hypothesis_skipped;
        }
    };

    const unsigned long ps[] = {2, 3, 5, 7};
    // scalar groups on F_p^1: hypotheses hold, dimension 1
    for (unsigned long p : ps) {
        for (unsigned long c = 1; c < p; ++c) {
            FpMat m(p, 1);
            m.at(0, 0) = c;
            try_instance({m}, {0}, p, 1);
        }
    }
    // scalars + coordinate shift on F_p^p: |V:U| = p but the all-ones line is
    // invariant, so simplicity fails and the instance must be filtered
    for (unsigned long p : {2ul, 3ul}) {
        size_t k = p;
        FpMat scal(p, k), shift(p, k);
        for (size_t i = 0; i < k; ++i) {
            scal.at(i, i) = p - 1;
            shift.at(i, (i + 1) % k) = 1;
        }
        try_instance({scal, shift}, {0}, p, k);
    }
    // seeded random matrix pairs
    for (size_t t = 0; t < random_instances; ++t) {
        unsigned long p = ps[rng.below(4)];
        size_t k = 1 + rng.below(3);
        FpMat a(p, k), b(p, k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) {
                a.at(i, j) = rng.below(p);
                b.at(i, j) = rng.below(p);
            }
        // keep only invertible generators (nonzero det via permanent-free check:
        // the perm construction below fails on non-bijections, so test directly)
        auto invertible = [&](const FpMat& m) {
            std::vector<FpVec> rows;
            for (size_t i = 0; i < k; ++i) {
                FpVec r(k);
                for (size_t j = 0; j < k; ++j) r[j] = m.at(i, j);
                rows.push_back(r);
            }
            return echelon_basis(rows, p).size() == k;
        };
        if (!invertible(a) || !invertible(b)) {
            ++rep.hypothesis_skipped;
            continue;
        }
        try_instance({a, b}, {0}, p, k);
    }
    return rep;
}

/// Normal-closure minimality, checked exhaustively for |N| <= 48.
inline SweepReport sweep_normal_closure_minimality(size_t max_order = 48) {
    SweepReport rep;
    rep.name = "normal-closure minimality";
    std::vector<Group> ambients{
        Group::closure(4, {parse_perm("(0 1 2 3)", 4), parse_perm("(0 1)", 4)}),     // S4
        Group::closure(7, {affine_perm(7, 1, 1), affine_perm(7, 3, 0)}),             // AGL(1,7)
        Group::closure(6, {parse_perm("(0 1 2 3 4 5)", 6), parse_perm("(1 5)(2 4)", 6)}),  // D6
    };
    for (const Group& g : ambients) {
        if (g.order() > max_order) continue;
        auto subs = all_subgroups(g);
        for (const Group& m : subs) {
            Group nc = normal_closure(m, g);
            ++rep.instances;
            if (!is_normal_in(nc, g) || !m.is_subgroup_of(nc)) {
                rep.fail("normal closure not normal or not containing M");
                continue;
            }
            for (const Group& k : subs)
                if (m.is_subgroup_of(k) && is_normal_in(k, g) && !nc.is_subgroup_of(k))
                    rep.fail("normal closure not minimal in |G|=" + std::to_string(g.order()));
        }
    }
    return rep;
}

}  // namespace rre
