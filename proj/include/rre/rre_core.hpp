/**
 * @file rre_core.hpp
 * @brief The decision kernel: prime-degree radical criterion, the chain
 *        search characterizing quasireal repeated radical extensions, and
 *        group-level preservation of intermediate fields.
 *
 * "U-isomorphic to a subgroup of E^x" is operationalized as equality of the
 * conjugation exponent map on a prime-order section with the stored
 * cyclotomic character at that prime; index-2 steps are always admissible
 * (the section is U-isomorphic to {+-1}). The kernel never touches field
 * arithmetic.
 */
#pragma once

#include "rre/galois_data.hpp"

namespace rre {

/// Subgroup chain M = M_0 < ... < M_r = N with per-step primes and re-check flags.
struct ChainStep {
    long prime = 0;
    bool normal = false;
    bool u_invariant = false;
    bool character_match = false;  // for p = 2: the automatic sign-character rule
};

struct ChainWitness {
    std::vector<Group> chain;      // ascending, chain.front() = M, chain.back() = N
    std::vector<ChainStep> steps;  // steps[i] joins chain[i] -> chain[i+1]
};

struct RreVerdict {
    enum class Outcome { chain_found, no_chain, condition_i_failed, not_applicable };
    Outcome outcome = Outcome::not_applicable;
    ChainWitness witness;          // set when chain_found
    size_t enumerated = 0;         // U-invariant intermediate subgroups inspected (no_chain audit)
    long condition_index = 0;      // |G : UN| when condition (i) fails
    std::string reason;

    bool found() const { return outcome == Outcome::chain_found; }

    std::string outcome_name() const {
        switch (outcome) {
            case Outcome::chain_found: return "ChainFound";
            case Outcome::no_chain: return "NoChain";
            case Outcome::condition_i_failed: return "ConditionIFailed";
            case Outcome::not_applicable: return "NotApplicable";
        }
        return "?";
    }
};

/// |G : UN| = |L cap F : Q| and its power-of-2 test (condition (i)).
inline std::pair<bool, long> check_condition_i(const GaloisDatum& d) {
    Group un = product_set(d.U, d.N);
    long index = static_cast<long>(d.G.order() / un.order());
    return {is_power_of_two(static_cast<size_t>(index)), index};
}

namespace detail {

/// Is S -> R an admissible chain step for the datum's characters?
inline bool admissible_step(const GaloisDatum& d, const Group& s, const Group& r, long* prime_out,
                            bool* char_match_out) {
    if (r.order() % s.order() != 0) return false;
    size_t idx = r.order() / s.order();
    if (!is_prime_index(idx)) return false;
    if (!is_normal_in(s, r)) return false;
    long p = static_cast<long>(idx);
    if (prime_out) *prime_out = p;
    if (p == 2) {
        // order-2 sections are U-isomorphic to {+-1}; always admissible
        if (char_match_out) *char_match_out = true;
        return true;
    }
    if (!d.has_char(p)) return false;  // no p-th roots of unity in E: condition (iv) unsatisfiable
    FactorAction fa = factor_action(r, s, d.U.generators());
    for (const auto& [actor, e] : fa.exponents)
        if (e != d.char_value(p, actor)) return false;
    if (char_match_out) *char_match_out = true;
    return true;
}

}  // namespace detail

/**
 * Prime-degree radical criterion: for |G : U| = p an odd prime, L is radical
 * over Q (quasireal case) iff |N : M| = p, M normal in N, and the U-action
 * on N/M equals the cyclotomic character at p.
 */
inline RreVerdict check_prime_degree_radical(const GaloisDatum& d) {
    RreVerdict v;
    size_t idx = d.G.order() / d.U.order();
    if (!is_prime_index(idx) || idx == 2) {
        v.outcome = RreVerdict::Outcome::not_applicable;
        v.reason = "|G:U| = " + std::to_string(idx) + " is not an odd prime";
        return v;
    }
    long p = static_cast<long>(idx);
    if (!d.has_char(p)) {
        v.outcome = RreVerdict::Outcome::not_applicable;
        v.reason = "E has no root of unity of order " + std::to_string(p) +
                   " (|N:M| = " + std::to_string(d.N.order() / d.M.order()) +
                   "): condition (iii) unsatisfiable";
        return v;
    }
    if (d.N.order() / d.M.order() != idx || d.N.order() % d.M.order() != 0) {
        v.outcome = RreVerdict::Outcome::no_chain;
        v.reason = "|N:M| = " + std::to_string(d.N.order() / d.M.order()) + " != " + std::to_string(p);
        return v;
    }
    if (!is_normal_in(d.M, d.N)) {
        v.outcome = RreVerdict::Outcome::no_chain;
        v.reason = "M not normal in N";
        return v;
    }
    long prime = 0;
    bool match = false;
    if (!detail::admissible_step(d, d.M, d.N, &prime, &match)) {
        v.outcome = RreVerdict::Outcome::no_chain;
        v.reason = "U-action on N/M differs from the cyclotomic character at " + std::to_string(p);
        return v;
    }
    v.outcome = RreVerdict::Outcome::chain_found;
    v.witness.chain = {d.M, d.N};
    v.witness.steps = {{prime, true, true, match}};
    return v;
}

/**
 * Chain search for the repeated-radical characterization: condition (i)
 * first, then a breadth-first search over U-invariant subgroups between M
 * and N where a step S -> R needs S normal in R of prime index with the
 * U-action matching the character. Requires the quasireal flag (the
 * theorem's hypothesis). `reverse_order` only permutes the enumeration; the
 * outcome must not depend on it.
 */
inline RreVerdict find_rre_chain(const GaloisDatum& d, bool reverse_order = false) {
    RreVerdict v;
    if (!d.l_quasireal) {
        v.outcome = RreVerdict::Outcome::not_applicable;
        v.reason = "L is not quasireal; the characterization does not apply";
        return v;
    }
    auto [two_power, index] = check_condition_i(d);
    if (!two_power) {
        v.outcome = RreVerdict::Outcome::condition_i_failed;
        v.condition_index = index;
        v.reason = "|L cap F : Q| = |G : UN| = " + std::to_string(index) + " is not a power of 2";
        return v;
    }

    // U-invariant subgroups between M and N
    std::vector<Group> nodes;
    for (const Group& s : subgroups_between(d.M, d.N)) {
        bool inv = true;
        for (const Perm& u : d.U.generators())
            if (conjugate_subgroup(s, u) != s) {
                inv = false;
                break;
            }
        if (inv) nodes.push_back(s);
    }
    if (reverse_order) std::reverse(nodes.begin(), nodes.end());
    v.enumerated = nodes.size();

    size_t start = 0, goal = 0;
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] == d.M) start = i;
        if (nodes[i] == d.N) goal = i;
    }
    std::vector<long> parent(nodes.size(), -1);
    std::vector<long> step_prime(nodes.size(), 0);
    std::vector<bool> seen(nodes.size(), false);
    std::vector<size_t> queue{start};
    seen[start] = true;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        size_t cur = queue[qi];
        if (cur == goal) break;
        for (size_t j = 0; j < nodes.size(); ++j) {
            if (seen[j] || nodes[j].order() <= nodes[cur].order()) continue;
            if (!nodes[cur].is_subgroup_of(nodes[j])) continue;
            long p = 0;
            if (detail::admissible_step(d, nodes[cur], nodes[j], &p, nullptr)) {
                seen[j] = true;
                parent[j] = static_cast<long>(cur);
                step_prime[j] = p;
                queue.push_back(j);
            }
        }
    }
    if (!seen[goal]) {
        v.outcome = RreVerdict::Outcome::no_chain;
        v.reason = "no admissible chain among " + std::to_string(nodes.size()) +
                   " U-invariant intermediate subgroups";
        return v;
    }
    std::vector<size_t> path;
    for (long cur = static_cast<long>(goal); cur != -1; cur = parent[static_cast<size_t>(cur)])
        path.push_back(static_cast<size_t>(cur));
    std::reverse(path.begin(), path.end());
    v.outcome = RreVerdict::Outcome::chain_found;
    for (size_t i = 0; i < path.size(); ++i) {
        v.witness.chain.push_back(nodes[path[i]]);
        if (i > 0) v.witness.steps.push_back({step_prime[path[i]], true, true, true});
    }
    return v;
}

/**
 * Independent re-check of a chain witness against raw group data. Kept
 * separate from the search; fills the per-step flags and returns whether
 * every check passed.
 */
inline bool verify_chain(const GaloisDatum& d, ChainWitness& w) {
    if (w.chain.empty()) return false;
    if (!(w.chain.front() == d.M) || !(w.chain.back() == d.N)) return false;
    if (w.steps.size() + 1 != w.chain.size()) return false;
    bool all_ok = true;
    for (size_t i = 0; i + 1 < w.chain.size(); ++i) {
        const Group& s = w.chain[i];
        const Group& r = w.chain[i + 1];
        ChainStep& st = w.steps[i];
        bool sub = s.is_subgroup_of(r) && s.order() < r.order();
        size_t idx = sub ? r.order() / s.order() : 0;
        bool prime_ok = sub && is_prime_index(idx) && static_cast<long>(idx) == st.prime;
        st.normal = sub && is_normal_in(s, r);
        st.u_invariant = true;
        for (const Perm& u : d.U.generators())
            if (conjugate_subgroup(s, u) != s || conjugate_subgroup(r, u) != r) st.u_invariant = false;
        st.character_match = false;
        if (prime_ok && st.normal && st.u_invariant) {
            if (st.prime == 2) {
                st.character_match = true;
            } else if (d.has_char(st.prime)) {
                FactorAction fa = factor_action(r, s, d.U.generators());
                st.character_match = true;
                for (const auto& [actor, e] : fa.exponents)
                    if (e != d.char_value(st.prime, actor)) st.character_match = false;
            }
        }
        all_ok = all_ok && prime_ok && st.normal && st.u_invariant && st.character_match;
    }
    return all_ok;
}

/**
 * Group-level intermediate-field preservation. For U <= V <= G, builds the
 * datum for the fixed field K of V and reruns the chain search. Requires the
 * hypotheses of one of the two preservation theorems:
 *   - odd branch: |G : U| odd and the datum carries an involution in U
 *     inverting every character (the complex-conjugation stand-in);
 *   - prime-power branch: |G : U| a prime power and L quasireal.
 */
struct PreservationResult {
    std::string branch;  // "odd-degree" or "prime-power"
    RreVerdict verdict;
    GaloisDatum sub_datum;
};

enum class PreservationBranch { automatic, odd_degree, prime_power };

inline PreservationResult intermediate_preservation(const GaloisDatum& d, const Group& v,
                                                    PreservationBranch want = PreservationBranch::automatic) {
    require_subgroup(d.U, v, "intermediate_preservation (U <= V)");
    require_subgroup(v, d.G, "intermediate_preservation (V <= G)");

    RreVerdict base = find_rre_chain(d);
    if (!base.found())
        throw std::invalid_argument("intermediate_preservation: the full datum has no chain");

    size_t index_u = d.G.order() / d.U.order();
    bool odd_branch = false, pp_branch = false;
    if (index_u % 2 == 1 && d.conjugation) {
        bool inverts = true;
        for (const auto& [p, vals] : d.characters)
            if (d.char_value(p, *d.conjugation) != p - 1) inverts = false;
        odd_branch = inverts;
    }
    if (d.l_quasireal) {
        for (size_t p = 2; p <= index_u; ++p)
            if (is_prime_index(p) && is_power_of(index_u, p)) pp_branch = true;
        if (index_u == 1) pp_branch = true;
    }
    if (want == PreservationBranch::odd_degree) pp_branch = false;
    if (want == PreservationBranch::prime_power) odd_branch = false;
    if (!odd_branch && !pp_branch)
        throw std::invalid_argument(
            "intermediate_preservation: neither the odd-degree nor the prime-power hypotheses hold");

    PreservationResult res;
    res.branch = odd_branch ? "odd-degree" : "prime-power";
    GaloisDatum sub = d;
    sub.U = v;
    sub.M = intersection(v, d.N);
    sub.label_L = "fixed field of V (intermediate)";
    sub.validate();
    res.verdict = find_rre_chain(sub);
    res.sub_datum = std::move(sub);
    return res;
}

}  // namespace rre
