/**
 * @file group.hpp
 * @brief Finite permutation groups with fully materialized element sets.
 *
 * Every group in scope is tiny (hard cap 10000 elements), so closure is a
 * plain breadth-first product sweep and all structural queries (normality,
 * normal closure, subnormality, invariant series, subgroup enumeration,
 * factor actions on prime-order sections) are exhaustive. Groups are
 * immutable after construction; queries are read-only.
 */
#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rre/perm.hpp"

namespace rre {

inline constexpr size_t kGroupOrderCap = 10000;

inline bool is_prime_index(size_t n) {
    if (n < 2) return false;
    for (size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline bool is_power_of(size_t n, size_t p) {
    if (n == 0) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotASubgroup : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class Group {
public:
    /// Closure of the generators under product and inverse.
    static Group closure(size_t degree, std::vector<Perm> gens, size_t cap = kGroupOrderCap) {
        for (const auto& g : gens)
            if (g.degree() != degree) throw std::invalid_argument("Group: generator degree mismatch");
        std::set<Perm> elems;
        elems.insert(Perm::identity(degree));
        std::vector<Perm> frontier(elems.begin(), elems.end());
        while (!frontier.empty()) {
            std::vector<Perm> next;
            for (const Perm& e : frontier) {
                for (const Perm& g : gens) {
                    Perm p = e * g;
                    if (elems.insert(p).second) {
                        if (elems.size() > cap) throw CapExceeded("Group: order cap exceeded");
                        next.push_back(std::move(p));
                    }
                }
            }
            frontier = std::move(next);
        }
        Group G;
        G.degree_ = degree;
        G.gens_ = std::move(gens);
        G.elems_.assign(elems.begin(), elems.end());
        return G;
    }

    static Group trivial(size_t degree) { return closure(degree, {}); }

    static Group from_elements(size_t degree, std::vector<Perm> elems) {
        std::set<Perm> distinct(elems.begin(), elems.end());
        Group g = closure(degree, std::move(elems));
        if (g.order() != distinct.size()) throw std::invalid_argument("Group: element set not closed");
        return g;
    }

    size_t degree() const { return degree_; }
    size_t order() const { return elems_.size(); }
    bool is_trivial() const { return order() == 1; }
    const std::vector<Perm>& generators() const { return gens_; }
    const std::vector<Perm>& elements() const { return elems_; }

    bool contains(const Perm& p) const {
        return std::binary_search(elems_.begin(), elems_.end(), p);
    }

    /// Index of an element in the sorted element list.
    size_t element_index(const Perm& p) const {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
        if (it == elems_.end() || *it != p) throw std::invalid_argument("Group: element not in group");
        return static_cast<size_t>(it - elems_.begin());
    }

    bool is_subgroup_of(const Group& other) const {
        if (degree_ != other.degree_) return false;
        for (const Perm& p : elems_)
            if (!other.contains(p)) return false;
        return true;
    }

    friend bool operator==(const Group& a, const Group& b) {
        return a.degree_ == b.degree_ && a.elems_ == b.elems_;
    }
    friend bool operator!=(const Group& a, const Group& b) { return !(a == b); }

private:
    size_t degree_ = 0;
    std::vector<Perm> gens_;
    std::vector<Perm> elems_;
};

inline void require_subgroup(const Group& m, const Group& n, const char* what) {
    if (!m.is_subgroup_of(n)) throw NotASubgroup(std::string(what) + ": not a subgroup");
}

/// Does t normalize N (t^-1 N t = N)?
inline bool normalizes(const Perm& t, const Group& n) {
    for (const Perm& g : n.generators())
        if (!n.contains(g.conj(t))) return false;
    return true;
}

inline bool centralizes(const Perm& t, const Group& n) {
    for (const Perm& g : n.elements())
        if (g.conj(t) != g) return false;
    return true;
}

/// M normal in N; both generator sets suffice.
inline bool is_normal_in(const Group& m, const Group& n) {
    require_subgroup(m, n, "is_normal_in");
    for (const Perm& g : n.generators())
        for (const Perm& s : m.generators())
            if (!m.contains(s.conj(g))) return false;
    return true;
}

/// Smallest normal subgroup of N containing M.
inline Group normal_closure(const Group& m, const Group& n) {
    require_subgroup(m, n, "normal_closure");
    std::vector<Perm> gens = m.generators();
    Group k = Group::closure(n.degree(), gens);
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<Perm> snapshot = gens;  // k is reassigned below
        for (const Perm& g : n.generators()) {
            for (const Perm& s : snapshot) {
                Perm c = s.conj(g);
                if (!k.contains(c)) {
                    gens.push_back(c);
                    k = Group::closure(n.degree(), gens);
                    grew = true;
                }
            }
        }
    }
    return k;
}

/**
 * Normal-closure descent N >= M^N >= M^(M^N) >= ...; M is subnormal in N
 * iff the descent reaches M. Returns the chain ascending from M to N when it
 * does.
 */
inline std::optional<std::vector<Group>> subnormal_descent(const Group& m, const Group& n) {
    require_subgroup(m, n, "subnormal_descent");
    std::vector<Group> chain{n};
    Group cur = n;
    while (cur != m) {
        Group next = normal_closure(m, cur);
        if (next == cur) return std::nullopt;  // stabilized above M
        chain.push_back(next);
        cur = next;
    }
    std::vector<Group> ascending(chain.rbegin(), chain.rend());
    return ascending;
}

inline bool is_subnormal_in(const Group& m, const Group& n) {
    return subnormal_descent(m, n).has_value();
}

/// Normal closure in G of all generator commutators: the derived subgroup.
inline Group derived_subgroup(const Group& g) {
    std::vector<Perm> comms;
    for (const Perm& a : g.generators())
        for (const Perm& b : g.generators()) {
            Perm c = a.inverse() * b.inverse() * a * b;
            if (!c.is_identity()) comms.push_back(c);
        }
    Group base = Group::closure(g.degree(), comms);
    return normal_closure(base, g);
}

/// Product set UN (a subgroup whenever one factor normalizes the other).
inline Group product_set(const Group& u, const Group& n) {
    if (u.degree() != n.degree()) throw std::invalid_argument("product_set: degree mismatch");
    std::set<Perm> prod;
    for (const Perm& a : u.elements())
        for (const Perm& b : n.elements()) prod.insert(a * b);
    std::vector<Perm> gens = u.generators();
    gens.insert(gens.end(), n.generators().begin(), n.generators().end());
    Group g = Group::closure(u.degree(), gens);
    if (g.order() != prod.size())
        throw std::logic_error("product_set: UN is not a subgroup here");
    return g;
}

inline Group intersection(const Group& a, const Group& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("intersection: degree mismatch");
    std::vector<Perm> common;
    for (const Perm& p : a.elements())
        if (b.contains(p)) common.push_back(p);
    return Group::closure(a.degree(), common);
}

inline Group conjugate_subgroup(const Group& g, const Perm& t) {
    std::vector<Perm> gens;
    gens.reserve(g.generators().size());
    for (const Perm& s : g.generators()) gens.push_back(s.conj(t));
    return Group::closure(g.degree(), gens);
}

/// Right coset representatives of S in R (first entry represents S itself).
inline std::vector<Perm> coset_reps(const Group& s, const Group& r) {
    require_subgroup(s, r, "coset_reps");
    std::vector<Perm> reps;
    std::set<Perm> covered;
    for (const Perm& x : r.elements()) {
        if (covered.count(x)) continue;
        reps.push_back(x);
        for (const Perm& a : s.elements()) covered.insert(a * x);
    }
    return reps;
}

/**
 * Invariant subnormal series from M up to N: the normal-closure descent
 * (every term is canonical, hence stabilized by any automorphism fixing M
 * and N), each step refined by the relative derived series S[R,R] >= ... so
 * factors are abelian wherever the section is solvable. The supplied
 * conjugators must stabilize M and N; the construction then keeps every term
 * invariant, which is re-checked before returning.
 */
inline std::vector<Group> invariant_subnormal_series(const Group& m, const Group& n,
                                                     const std::vector<Perm>& stabilizing_auts = {}) {
    for (const Perm& t : stabilizing_auts) {
        if (conjugate_subgroup(m, t) != m || conjugate_subgroup(n, t) != n)
            throw std::invalid_argument("invariant_subnormal_series: conjugator moves M or N");
    }
    auto descent = subnormal_descent(m, n);
    if (!descent) throw std::invalid_argument("invariant_subnormal_series: M not subnormal in N");

    std::vector<Group> series;
    series.push_back(m);
    for (size_t i = 0; i + 1 < descent->size(); ++i) {
        const Group& s = (*descent)[i];
        const Group& r = (*descent)[i + 1];
        // relative derived chain R >= S[R,R] >= S[[R,R],[R,R]] >= ... >= S
        std::vector<Group> derived_chain;
        Group cur = r;
        while (true) {
            Group d = derived_subgroup(cur);
            Group t = product_set(s, d);
            if (t == cur) break;  // stalled (non-solvable section) or reached S
            derived_chain.push_back(t);
            cur = t;
            if (t == s) break;
        }
        for (auto it = derived_chain.rbegin(); it != derived_chain.rend(); ++it)
            if (*it != s) series.push_back(*it);
        series.push_back(r);
    }
    // sanity: consecutive normal inclusions and invariance under the conjugators
    for (size_t i = 0; i + 1 < series.size(); ++i)
        if (!is_normal_in(series[i], series[i + 1]))
            throw std::logic_error("invariant_subnormal_series: non-normal step");
    for (const Perm& t : stabilizing_auts)
        for (const Group& g : series)
            if (conjugate_subgroup(g, t) != g)
                throw std::logic_error("invariant_subnormal_series: term not invariant");
    return series;
}

/**
 * All subgroups T with M <= T <= N, by fixpoint closure: extend every known
 * subgroup by one element of N until nothing new appears. Feasible because
 * |N : M| stays small in scope.
 */
inline std::vector<Group> subgroups_between(const Group& m, const Group& n) {
    require_subgroup(m, n, "subgroups_between");
    std::map<std::vector<Perm>, Group> found;
    found.emplace(m.elements(), m);
    std::vector<Group> frontier{m};
    while (!frontier.empty()) {
        std::vector<Group> next;
        for (const Group& s : frontier) {
            if (s.order() == n.order()) continue;
            for (const Perm& x : n.elements()) {
                if (s.contains(x)) continue;
                std::vector<Perm> gens = s.generators();
                gens.insert(gens.end(), m.generators().begin(), m.generators().end());
                gens.push_back(x);
                Group t = Group::closure(n.degree(), gens);
                if (!t.is_subgroup_of(n)) continue;  // cannot happen; defensive against bad inputs
                auto [it, fresh] = found.emplace(t.elements(), t);
                if (fresh) next.push_back(it->second);
            }
        }
        frontier = std::move(next);
    }
    std::vector<Group> out;
    out.reserve(found.size());
    for (auto& [k, v] : found) out.push_back(v);
    return out;
}

inline std::vector<Group> all_subgroups(const Group& g) {
    return subgroups_between(Group::trivial(g.degree()), g);
}

/**
 * Conjugation action of the actors on a prime-order section R/S as exponents
 * in (Z/p)^x. Requires S normal in R of prime index and every actor
 * normalizing both.
 */
struct FactorAction {
    long prime = 0;
    std::vector<std::pair<Perm, long>> exponents;  // actor -> unit mod p

    long exponent_of(const Perm& actor) const {
        for (const auto& [a, e] : exponents)
            if (a == actor) return e;
        throw std::invalid_argument("FactorAction: unknown actor");
    }
};

inline FactorAction factor_action(const Group& r, const Group& s, const std::vector<Perm>& actors) {
    require_subgroup(s, r, "factor_action");
    if (!is_normal_in(s, r)) throw std::invalid_argument("factor_action: S not normal in R");
    if (r.order() % s.order() != 0) throw std::logic_error("factor_action: order division");
    size_t idx = r.order() / s.order();
    if (!is_prime_index(idx)) throw std::invalid_argument("factor_action: index not prime");
    const long p = static_cast<long>(idx);
    for (const Perm& t : actors)
        if (!normalizes(t, r) || !normalizes(t, s))
            throw std::invalid_argument("factor_action: actor does not normalize the section");

    // generator coset: any tau in R - S generates R/S (prime order)
    Perm tau = Perm::identity(r.degree());
    for (const Perm& x : r.elements())
        if (!s.contains(x)) {
            tau = x;
            break;
        }
    // powers of the coset S*tau
    std::vector<Perm> tau_pow{Perm::identity(r.degree())};
    for (long e = 1; e < p; ++e) tau_pow.push_back(tau_pow.back() * tau);

    FactorAction fa;
    fa.prime = p;
    for (const Perm& t : actors) {
        Perm conj = tau.conj(t);
        long found = -1;
        for (long e = 0; e < p; ++e) {
            if (s.contains(conj * tau_pow[static_cast<size_t>(e)].inverse())) {
                found = e;
                break;
            }
        }
        if (found <= 0)
            throw std::logic_error("factor_action: conjugation does not act on the section");
        fa.exponents.emplace_back(t, found);
    }
    return fa;
}

}  // namespace rre
