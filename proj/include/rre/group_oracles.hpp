/**
 * @file group_oracles.hpp
 * @brief Brute-force oracles for the supporting group-theoretic lemmas:
 *        the partition fixed-point lemma, fixed-point-free actions on
 *        sections, subnormality preservation under a fixed-point-free prime
 *        automorphism, and the one-dimensional-module lemma.
 *
 * Each oracle verifies its hypotheses exhaustively and throws OracleError
 * when they fail; under verified hypotheses the returned value is expected
 * to be `true` on every instance, so any `false` flags a bug in either the
 * engine or the hypothesis checker.
 *
 * Automorphisms are conjugation by elements of a common ambient permutation
 * group; outer automorphisms are realized by extending the domain (e.g.
 * inversion on C_n lives inside the dihedral group).
 */
#pragma once

#include "rre/fp_linear.hpp"
#include "rre/group.hpp"

namespace rre {

struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Order of the automorphism of N induced by conjugation with sigma.
inline size_t induced_aut_order(const Perm& sigma, const Group& n) {
    if (!normalizes(sigma, n)) throw std::invalid_argument("induced_aut_order: sigma does not normalize N");
    Perm pw = sigma;
    for (size_t k = 1; k <= sigma.order(); ++k) {
        if (centralizes(pw, n)) return k;
        pw = pw * sigma;
    }
    throw std::logic_error("induced_aut_order: unreachable");
}

/// sigma acts without nonidentity fixed points on R/S (S normal in R).
inline bool fixed_point_free_on_section(const Group& s, const Group& r, const Perm& sigma) {
    if (!is_normal_in(s, r)) throw std::invalid_argument("fixed_point_free_on_section: S not normal in R");
    for (const Perm& x : coset_reps(s, r)) {
        if (s.contains(x)) continue;
        Perm moved = x.conj(sigma) * x.inverse();
        if (s.contains(moved)) return false;  // coset Sx is sigma-fixed
    }
    return true;
}

/**
 * Hypothesis probe shared by the section and subnormality oracles: sigma
 * must act fixed-point-freely on the factors of some sigma-invariant
 * subnormal series from M to N. By the section lemma this holds for some
 * series iff it holds for the canonical one, so only that one is checked.
 */
inline bool fpf_on_canonical_series(const Group& m, const Group& n, const Perm& sigma) {
    auto series = invariant_subnormal_series(m, n, {sigma});
    for (size_t i = 0; i + 1 < series.size(); ++i)
        if (!fixed_point_free_on_section(series[i], series[i + 1], sigma)) return false;
    return true;
}

/**
 * Partition fixed-point oracle: a partition of G acting on a module with an
 * element of order not dividing |P| - 1 must leave some member with
 * nontrivial fixed points.
 */
inline bool oracle_partition_lemma(const Group& g, const std::vector<Group>& partition,
                                   const ModuleAction& module, unsigned long witness_order) {
    if (partition.empty()) throw OracleError("partition lemma: empty partition");
    size_t covered = 1;
    for (size_t i = 0; i < partition.size(); ++i) {
        require_subgroup(partition[i], g, "partition lemma");
        if (partition[i].is_trivial()) throw OracleError("partition lemma: trivial member");
        covered += partition[i].order() - 1;
        for (size_t j = i + 1; j < partition.size(); ++j)
            if (intersection(partition[i], partition[j]).order() != 1)
                throw OracleError("partition lemma: members intersect nontrivially");
    }
    if (covered != g.order()) throw OracleError("partition lemma: union does not cover G");
    if (!(module.grp == g)) throw OracleError("partition lemma: module acts on a different group");
    if (module.dim == 0) throw OracleError("partition lemma: zero module");
    // every nonzero vector of F_p^k has order p
    if (witness_order != module.p || (partition.size() - 1) % witness_order == 0)
        throw OracleError("partition lemma: no element order outside |P| - 1");

    for (const Group& h : partition) {
        std::vector<FpMat> mats;
        for (const Perm& x : h.generators()) mats.push_back(module.mat_of(x));
        if (!common_fixed_space(mats, module.p, module.dim).empty()) return true;
    }
    return false;
}

/**
 * Section oracle: with M subnormal and sigma fixed-point-free on one
 * invariant series, sigma is fixed-point-free on every sigma-invariant
 * section R/S between M and N.
 */
inline bool oracle_fpf_section(const Group& n, const Group& m, const Perm& sigma, const Group& r,
                               const Group& s) {
    require_subgroup(m, s, "fpf section oracle (M <= S)");
    require_subgroup(s, r, "fpf section oracle (S <= R)");
    require_subgroup(r, n, "fpf section oracle (R <= N)");
    if (!normalizes(sigma, n) || conjugate_subgroup(m, sigma) != m)
        throw OracleError("fpf section oracle: sigma must stabilize M and N");
    size_t p = induced_aut_order(sigma, n);
    if (!is_prime_index(p)) throw OracleError("fpf section oracle: automorphism order not prime");
    if (!is_subnormal_in(m, n)) throw OracleError("fpf section oracle: M not subnormal in N");
    if (!fpf_on_canonical_series(m, n, sigma))
        throw OracleError("fpf section oracle: sigma has fixed points on the invariant series");
    if (conjugate_subgroup(r, sigma) != r || conjugate_subgroup(s, sigma) != s)
        throw OracleError("fpf section oracle: R or S not sigma-invariant");
    if (!is_normal_in(s, r)) throw OracleError("fpf section oracle: S not normal in R");
    if (s == r) return true;  // vacuous section
    return fixed_point_free_on_section(s, r, sigma);
}

/**
 * Subnormality oracle: under the same fixed-point-free hypotheses, every
 * intermediate M <= R <= N (sigma-invariant required only for p > 2) is
 * subnormal, and sigma-invariant even when p = 2.
 */
inline bool oracle_thm52(const Group& n, const Group& m, const Perm& sigma, const Group& r) {
    require_subgroup(m, r, "thm52 oracle (M <= R)");
    require_subgroup(r, n, "thm52 oracle (R <= N)");
    if (!normalizes(sigma, n) || conjugate_subgroup(m, sigma) != m)
        throw OracleError("thm52 oracle: sigma must stabilize M and N");
    size_t p = induced_aut_order(sigma, n);
    if (!is_prime_index(p)) throw OracleError("thm52 oracle: automorphism order not prime");
    if (!is_subnormal_in(m, n)) throw OracleError("thm52 oracle: M not subnormal in N");
    if (!fpf_on_canonical_series(m, n, sigma))
        throw OracleError("thm52 oracle: sigma has fixed points on the invariant series");
    if (p > 2 && conjugate_subgroup(r, sigma) != r)
        throw OracleError("thm52 oracle: R must be sigma-invariant when p > 2");

    bool ok = is_subnormal_in(r, n);
    if (p == 2) ok = ok && conjugate_subgroup(r, sigma) == r;
    return ok;
}

/**
 * One-dimensional-module oracle: |V:U| a p-power, X a simple F_p V-module
 * whose U-composition factors are all 1-dimensional and isomorphic forces
 * dim X = 1. Sizes are capped so the invariant-subspace searches stay
 * exhaustive.
 */
inline bool oracle_lemma82(const Group& v, const Group& u, unsigned long p, const ModuleAction& module) {
    if (p != 2 && p != 3 && p != 5 && p != 7) throw OracleError("lemma82 oracle: p outside {2,3,5,7}");
    if (module.dim > 4) throw OracleError("lemma82 oracle: dimension above 4");
    if (v.order() > 100) throw OracleError("lemma82 oracle: |V| above 100");
    require_subgroup(u, v, "lemma82 oracle");
    if (!(module.grp == v) || module.p != p) throw OracleError("lemma82 oracle: module mismatch");
    if (!is_power_of(v.order() / u.order(), p)) throw OracleError("lemma82 oracle: |V:U| not a p-power");
    if (!module_is_simple(module.generator_mats(), p, module.dim))
        throw OracleError("lemma82 oracle: module not simple over V");

    std::vector<FpMat> u_mats;
    for (const Perm& x : u.generators()) u_mats.push_back(module.mat_of(x));
    if (u_mats.empty()) u_mats.push_back(FpMat::identity(p, module.dim));
    auto factors = composition_factors(u_mats, p, module.dim);
    for (const auto& f : factors) {
        if (f.dim != 1) throw OracleError("lemma82 oracle: U-composition factor not 1-dimensional");
        if (f.scalars != factors.front().scalars)
            throw OracleError("lemma82 oracle: U-composition factors not isomorphic");
    }
    return module.dim == 1;
}

}  // namespace rre
