/**
 * @file fp_linear.hpp
 * @brief Tiny exact linear algebra over F_p (dims <= 4) backing the
 *        group-action oracles: matrix actions, fixed spaces, submodule
 *        closures, quotients and composition factors.
 */
#pragma once

#include <optional>
#include <vector>

#include "rre/group.hpp"

namespace rre {

using FpVec = std::vector<unsigned long>;

struct FpMat {
    unsigned long p = 2;
    size_t n = 0;
    std::vector<unsigned long> a;  // row-major

    FpMat() = default;
    FpMat(unsigned long p_, size_t n_) : p(p_), n(n_), a(n_ * n_, 0) {}

    static FpMat identity(unsigned long p, size_t n) {
        FpMat m(p, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    unsigned long& at(size_t i, size_t j) { return a[i * n + j]; }
    unsigned long at(size_t i, size_t j) const { return a[i * n + j]; }

    friend FpMat operator*(const FpMat& x, const FpMat& y) {
        FpMat r(x.p, x.n);
        for (size_t i = 0; i < x.n; ++i)
            for (size_t k = 0; k < x.n; ++k) {
                unsigned long v = x.at(i, k);
                if (!v) continue;
                for (size_t j = 0; j < x.n; ++j)
                    r.at(i, j) = (r.at(i, j) + v * y.at(k, j)) % x.p;
            }
        return r;
    }

    /// row-vector action: (vM)_j = sum_i v_i M_ij
    FpVec apply(const FpVec& v) const {
        FpVec r(n, 0);
        for (size_t i = 0; i < n; ++i) {
            if (!v[i]) continue;
            for (size_t j = 0; j < n; ++j) r[j] = (r[j] + v[i] * at(i, j)) % p;
        }
        return r;
    }

    friend bool operator==(const FpMat& x, const FpMat& y) {
        return x.p == y.p && x.n == y.n && x.a == y.a;
    }
};

inline bool is_zero_vec(const FpVec& v) {
    for (auto x : v)
        if (x) return false;
    return true;
}

inline unsigned long fp_inv(unsigned long x, unsigned long p) {
    // p is a small prime
    unsigned long r = 1, b = x % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

/// Reduced row-echelon basis of the span of the given vectors.
inline std::vector<FpVec> echelon_basis(std::vector<FpVec> rows, unsigned long p) {
    std::vector<FpVec> basis;
    for (FpVec v : rows) {
        for (const FpVec& b : basis) {
            // eliminate at b's pivot
            size_t piv = 0;
            while (piv < b.size() && b[piv] == 0) ++piv;
            if (piv < v.size() && v[piv]) {
                unsigned long f = v[piv];
                for (size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + (p - f) * b[j]) % p;
            }
        }
        if (!is_zero_vec(v)) {
            size_t piv = 0;
            while (v[piv] == 0) ++piv;
            unsigned long inv = fp_inv(v[piv], p);
            for (auto& x : v) x = x * inv % p;
            // back-substitute into existing basis rows
            for (FpVec& b : basis) {
                if (b[piv]) {
                    unsigned long f = b[piv];
                    for (size_t j = 0; j < b.size(); ++j) b[j] = (b[j] + (p - f) * v[j]) % p;
                }
            }
            basis.push_back(std::move(v));
        }
    }
    // sort rows by pivot for determinism
    std::sort(basis.begin(), basis.end(), [](const FpVec& a, const FpVec& b) {
        size_t pa = 0, pb = 0;
        while (pa < a.size() && a[pa] == 0) ++pa;
        while (pb < b.size() && b[pb] == 0) ++pb;
        return pa < pb;
    });
    return basis;
}

inline bool in_span(const std::vector<FpVec>& echelon, FpVec v, unsigned long p) {
    for (const FpVec& b : echelon) {
        size_t piv = 0;
        while (piv < b.size() && b[piv] == 0) ++piv;
        if (piv < v.size() && v[piv]) {
            unsigned long f = v[piv];
            for (size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + (p - f) * b[j]) % p;
        }
    }
    return is_zero_vec(v);
}

/**
 * Common fixed vectors of all the matrices. Dimensions in scope are at most
 * 4 over p <= 7, so sweeping all p^n vectors is exact and obviously right.
 */
inline std::vector<FpVec> common_fixed_space(const std::vector<FpMat>& mats, unsigned long p, size_t n) {
    std::vector<FpVec> fixed;
    FpVec v(n, 0);
    for (;;) {
        if (!is_zero_vec(v)) {
            bool ok = true;
            for (const FpMat& m : mats) {
                if (m.apply(v) != v) {
                    ok = false;
                    break;
                }
            }
            if (ok) fixed.push_back(v);
        }
        size_t i = 0;
        while (i < n) {
            if (++v[i] < p) break;
            v[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return echelon_basis(fixed, p);
}

/// Span closure of the seeds under the generator matrices.
inline std::vector<FpVec> submodule_span(const std::vector<FpMat>& gen_mats,
                                         const std::vector<FpVec>& seeds, unsigned long p) {
    std::vector<FpVec> basis = echelon_basis(seeds, p);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<FpVec> images;
        for (const FpVec& b : basis)
            for (const FpMat& m : gen_mats) {
                FpVec w = m.apply(b);
                if (!in_span(basis, w, p)) images.push_back(std::move(w));
            }
        if (!images.empty()) {
            std::vector<FpVec> rows = basis;
            rows.insert(rows.end(), images.begin(), images.end());
            basis = echelon_basis(rows, p);
            grew = true;
        }
    }
    return basis;
}

/// Action table: one matrix per group element, aligned with g.elements().
struct ModuleAction {
    Group grp;
    unsigned long p = 2;
    size_t dim = 0;
    std::vector<FpMat> by_element;

    const FpMat& mat_of(const Perm& x) const { return by_element[grp.element_index(x)]; }

    std::vector<FpMat> generator_mats() const {
        std::vector<FpMat> out;
        out.reserve(grp.generators().size());
        for (const Perm& g : grp.generators()) out.push_back(mat_of(g));
        return out;
    }
};

/**
 * Extend generator matrices to the whole group along a BFS of products, then
 * verify multiplicativity on every pair, so the result is a checked action
 * table rather than a trusted one.
 */
inline ModuleAction make_module_action(const Group& g, const std::vector<FpMat>& gen_mats,
                                       unsigned long p, size_t dim) {
    if (gen_mats.size() != g.generators().size())
        throw std::invalid_argument("make_module_action: one matrix per generator required");
    ModuleAction act;
    act.grp = g;
    act.p = p;
    act.dim = dim;
    act.by_element.assign(g.order(), FpMat());
    std::vector<bool> known(g.order(), false);
    size_t id_idx = g.element_index(Perm::identity(g.degree()));
    act.by_element[id_idx] = FpMat::identity(p, dim);
    known[id_idx] = true;
    std::vector<size_t> frontier{id_idx};
    while (!frontier.empty()) {
        std::vector<size_t> next;
        for (size_t ei : frontier) {
            const Perm& e = g.elements()[ei];
            for (size_t gi = 0; gi < g.generators().size(); ++gi) {
                Perm prod = e * g.generators()[gi];
                size_t pi = g.element_index(prod);
                if (known[pi]) continue;
                act.by_element[pi] = act.by_element[ei] * gen_mats[gi];
                known[pi] = true;
                next.push_back(pi);
            }
        }
        frontier = std::move(next);
    }
    for (bool k : known)
        if (!k) throw std::logic_error("make_module_action: group not generated by generators");
    // full verification of the action table
    for (size_t i = 0; i < g.order(); ++i)
        for (size_t j = 0; j < g.order(); ++j) {
            Perm prod = g.elements()[i] * g.elements()[j];
            if (!(act.by_element[g.element_index(prod)] == act.by_element[i] * act.by_element[j]))
                throw std::logic_error("make_module_action: matrices are not a homomorphism");
        }
    return act;
}

/// Simplicity: every nonzero vector generates the whole module.
inline bool module_is_simple(const std::vector<FpMat>& gen_mats, unsigned long p, size_t dim) {
    if (dim == 0) return false;
    FpVec v(dim, 0);
    for (;;) {
        size_t i = 0;
        while (i < dim) {
            if (++v[i] < p) break;
            v[i] = 0;
            ++i;
        }
        if (i == dim) break;
        if (is_zero_vec(v)) continue;
        if (submodule_span(gen_mats, {v}, p).size() != dim) return false;
    }
    return true;
}

struct CompositionFactor {
    size_t dim = 0;
    std::vector<unsigned long> scalars;  // per generator, when dim == 1
};

namespace detail {

/// Restrict matrices to an invariant subspace with echelon basis B.
inline std::vector<FpMat> restrict_mats(const std::vector<FpMat>& mats, const std::vector<FpVec>& B,
                                        unsigned long p) {
    std::vector<FpMat> out;
    for (const FpMat& m : mats) {
        FpMat r(p, B.size());
        for (size_t i = 0; i < B.size(); ++i) {
            FpVec w = m.apply(B[i]);
            // express w in the echelon basis B
            for (size_t bi = 0; bi < B.size(); ++bi) {
                size_t piv = 0;
                while (piv < B[bi].size() && B[bi][piv] == 0) ++piv;
                unsigned long coef = w[piv];
                r.at(i, bi) = coef;
                if (coef)
                    for (size_t j = 0; j < w.size(); ++j) w[j] = (w[j] + (p - coef) * B[bi][j]) % p;
            }
            if (!is_zero_vec(w)) throw std::logic_error("restrict_mats: subspace not invariant");
        }
        out.push_back(std::move(r));
    }
    return out;
}

/// Quotient action modulo the invariant subspace with echelon basis B.
inline std::vector<FpMat> quotient_mats(const std::vector<FpMat>& mats, const std::vector<FpVec>& B,
                                        unsigned long p, size_t dim) {
    // complement coordinates: standard vectors whose index is not a pivot of B
    std::vector<size_t> pivots;
    for (const FpVec& b : B) {
        size_t piv = 0;
        while (piv < b.size() && b[piv] == 0) ++piv;
        pivots.push_back(piv);
    }
    std::vector<size_t> comp;
    for (size_t i = 0; i < dim; ++i)
        if (std::find(pivots.begin(), pivots.end(), i) == pivots.end()) comp.push_back(i);

    auto project = [&](FpVec w) {
        // reduce modulo B, then read off complement coordinates
        for (size_t bi = 0; bi < B.size(); ++bi) {
            unsigned long coef = w[pivots[bi]];
            if (coef)
                for (size_t j = 0; j < w.size(); ++j) w[j] = (w[j] + (p - coef) * B[bi][j]) % p;
        }
        FpVec out(comp.size());
        for (size_t i = 0; i < comp.size(); ++i) out[i] = w[comp[i]];
        return out;
    };

    std::vector<FpMat> out;
    for (const FpMat& m : mats) {
        FpMat q(p, comp.size());
        for (size_t i = 0; i < comp.size(); ++i) {
            FpVec e(dim, 0);
            e[comp[i]] = 1;
            FpVec img = project(m.apply(e));
            for (size_t j = 0; j < comp.size(); ++j) q.at(i, j) = img[j];
        }
        out.push_back(std::move(q));
    }
    return out;
}

}  // namespace detail

/**
 * Composition factors of F_p^dim under the generator matrices, built by
 * repeatedly splitting off a minimal submodule. Factor order is bottom-up.
 */
inline std::vector<CompositionFactor> composition_factors(const std::vector<FpMat>& gen_mats,
                                                          unsigned long p, size_t dim) {
    std::vector<CompositionFactor> out;
    std::vector<FpMat> mats = gen_mats;
    size_t cur = dim;
    while (cur > 0) {
        // minimal submodule: smallest-dimension cyclic submodule
        std::vector<FpVec> best;
        FpVec v(cur, 0);
        for (;;) {
            size_t i = 0;
            while (i < cur) {
                if (++v[i] < p) break;
                v[i] = 0;
                ++i;
            }
            if (i == cur) break;
            if (is_zero_vec(v)) continue;
            auto sub = submodule_span(mats, {v}, p);
            if (best.empty() || sub.size() < best.size()) best = sub;
            if (best.size() == 1) break;
        }
        CompositionFactor f;
        f.dim = best.size();
        if (f.dim == 1) {
            auto rest = detail::restrict_mats(mats, best, p);
            for (const FpMat& m : rest) f.scalars.push_back(m.at(0, 0));
        }
        out.push_back(f);
        mats = detail::quotient_mats(mats, best, p, cur);
        cur -= best.size();
    }
    return out;
}

}  // namespace rre
