/**
 * @file tower.hpp
 * @brief Radical-tower witnesses: an ordered list of steps, each adjoining a
 *        real n-th root of an expression over the previous steps, plus root
 *        expressions evaluated by exact rational interval arithmetic.
 *
 * Ground-field scalars are QuadFieldElem (d = 0 covers Q). Verification
 * refines all step enclosures until the requested widths are certain; a
 * radicand whose sign cannot be decided at the precision cap is an error,
 * never a silent pass.
 */
#pragma once

#include <functional>
#include <memory>

#include "rre/interval.hpp"
#include "rre/polynomial.hpp"

namespace rre {

class TowerExpr {
public:
    enum class Kind { constant, step_ref, add, sub, mul, div, neg };

    static TowerExpr constant(QuadFieldElem v) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::constant;
        n->value = std::move(v);
        return TowerExpr(std::shared_ptr<const Node>(std::move(n)));
    }
    static TowerExpr step(size_t index) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::step_ref;
        n->step_index = index;
        return TowerExpr(std::shared_ptr<const Node>(std::move(n)));
    }

    // zero/one constants fold away so emitted expressions stay readable
    friend TowerExpr operator+(const TowerExpr& a, const TowerExpr& b) {
        if (a.is_const_zero()) return b;
        if (b.is_const_zero()) return a;
        return binary(Kind::add, a, b);
    }
    friend TowerExpr operator-(const TowerExpr& a, const TowerExpr& b) {
        if (b.is_const_zero()) return a;
        if (a.is_const_zero()) return -b;
        return binary(Kind::sub, a, b);
    }
    friend TowerExpr operator*(const TowerExpr& a, const TowerExpr& b) {
        if (a.is_const_one()) return b;
        if (b.is_const_one()) return a;
        return binary(Kind::mul, a, b);
    }
    friend TowerExpr operator/(const TowerExpr& a, const TowerExpr& b) {
        if (b.is_const_one()) return a;
        return binary(Kind::div, a, b);
    }
    TowerExpr operator-() const {
        auto n = std::make_shared<Node>();
        n->kind = Kind::neg;
        n->left = node_;
        return TowerExpr(std::shared_ptr<const Node>(std::move(n)));
    }

    Kind kind() const { return node_->kind; }

    bool is_const_zero() const { return node_->kind == Kind::constant && node_->value.is_zero(); }
    bool is_const_one() const {
        return node_->kind == Kind::constant && node_->value == QuadFieldElem(1);
    }

    RatInterval eval(const std::vector<RatInterval>& step_values, unsigned prec_bits) const {
        return eval_node(*node_, step_values, prec_bits);
    }

    /// Remap step references (used when composite steps are split).
    TowerExpr remap_steps(const std::vector<size_t>& new_index) const {
        return TowerExpr(remap_node(*node_, new_index));
    }

    std::string str() const { return str_node(*node_); }

private:
    struct Node {
        Kind kind = Kind::constant;
        QuadFieldElem value;       // constant
        size_t step_index = 0;     // step_ref
        std::shared_ptr<const Node> left, right;
    };

    explicit TowerExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static TowerExpr binary(Kind k, const TowerExpr& a, const TowerExpr& b) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->left = a.node_;
        n->right = b.node_;
        return TowerExpr(std::shared_ptr<const Node>(std::move(n)));
    }

    static RatInterval eval_node(const Node& n, const std::vector<RatInterval>& steps, unsigned prec) {
        switch (n.kind) {
            case Kind::constant: return quad_interval(n.value, prec);
            case Kind::step_ref: return steps.at(n.step_index);
            case Kind::add: return eval_node(*n.left, steps, prec) + eval_node(*n.right, steps, prec);
            case Kind::sub: return eval_node(*n.left, steps, prec) - eval_node(*n.right, steps, prec);
            case Kind::mul: return eval_node(*n.left, steps, prec) * eval_node(*n.right, steps, prec);
            case Kind::div: return eval_node(*n.left, steps, prec) / eval_node(*n.right, steps, prec);
            case Kind::neg: return -eval_node(*n.left, steps, prec);
        }
        throw std::logic_error("TowerExpr: bad node");
    }

    static std::shared_ptr<const Node> remap_node(const Node& n, const std::vector<size_t>& idx) {
        auto copy = std::make_shared<Node>(n);
        if (n.kind == Kind::step_ref) copy->step_index = idx.at(n.step_index);
        if (n.left) copy->left = remap_node(*n.left, idx);
        if (n.right) copy->right = remap_node(*n.right, idx);
        return copy;
    }

    static std::string str_node(const Node& n) {
        switch (n.kind) {
            case Kind::constant: return n.value.str();
            case Kind::step_ref: return "r" + std::to_string(n.step_index + 1);
            case Kind::add: return "(" + str_node(*n.left) + " + " + str_node(*n.right) + ")";
            case Kind::sub: return "(" + str_node(*n.left) + " - " + str_node(*n.right) + ")";
            case Kind::mul: return "(" + str_node(*n.left) + " * " + str_node(*n.right) + ")";
            case Kind::div: return "(" + str_node(*n.left) + " / " + str_node(*n.right) + ")";
            case Kind::neg: return "-(" + str_node(*n.left) + ")";
        }
        return "?";
    }

    std::shared_ptr<const Node> node_;
};

/// One radical step: adjoin the real index-th root of the radicand.
struct TowerStep {
    unsigned index = 2;   // >= 2
    TowerExpr radicand;   // expression over earlier steps and ground scalars
    bool real = true;     // towers here are real by construction
};

struct RadicalTower {
    std::vector<TowerStep> steps;

    std::string describe() const {
        std::string out;
        for (size_t i = 0; i < steps.size(); ++i) {
            out += "r" + std::to_string(i + 1) + " = (" + steps[i].radicand.str() + ")^(1/" +
                   std::to_string(steps[i].index) + ")";
            if (i + 1 < steps.size()) out += "; ";
        }
        return out.empty() ? "(no radical steps needed)" : out;
    }
};

struct TowerPrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr unsigned kTowerMaxPrecBits = 4096;

inline bool is_prime_index_u(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/**
 * Enclosures for every step value at the given precision. Even-index steps
 * must have a provably nonnegative radicand; if the enclosure straddles zero
 * the caller should retry at higher precision.
 */
inline std::vector<RatInterval> evaluate_tower_steps(const RadicalTower& t, unsigned prec_bits) {
    std::vector<RatInterval> vals;
    vals.reserve(t.steps.size());
    for (const TowerStep& s : t.steps) {
        RatInterval rad = s.radicand.eval(vals, prec_bits);
        if (s.index % 2 == 0 && rad.lo < 0) {
            if (rad.hi < 0)
                throw std::domain_error("tower: even-index radicand is negative; tower not real");
            throw TowerPrecisionError("tower: radicand sign undecided at this precision");
        }
        vals.push_back(nth_root_interval(rad, s.index, prec_bits));
    }
    return vals;
}

/// Evaluate an expression over the tower, refining until width <= target.
inline RatInterval evaluate_over_tower(const RadicalTower& t, const TowerExpr& e,
                                       const Rational& target_width) {
    for (unsigned prec = 64; prec <= kTowerMaxPrecBits; prec *= 2) {
        try {
            auto vals = evaluate_tower_steps(t, prec);
            RatInterval r = e.eval(vals, prec);
            if (r.width() <= target_width) return r;
        } catch (const TowerPrecisionError&) {
        } catch (const IntervalDivByZero&) {
            // divisor enclosure straddled zero; refine
        }
    }
    throw TowerPrecisionError("tower evaluation did not reach the requested width");
}

/**
 * Numeric witness check: f evaluated at the root expression enclosed in an
 * interval of width <= 2^-check_bits containing zero, and the root enclosure
 * overlapping the claimed isolating interval.
 */
inline bool verify_tower_root(const RadicalTower& t, const TowerExpr& root,
                              const Polynomial<QuadFieldElem>& f, const RatInterval& claimed,
                              unsigned check_bits = 30) {
    Rational target(Int(1), Int(1) << check_bits);
    for (unsigned prec = 64; prec <= kTowerMaxPrecBits; prec *= 2) {
        try {
            auto vals = evaluate_tower_steps(t, prec);
            RatInterval x = root.eval(vals, prec);
            RatInterval acc = RatInterval::point(Rational(0));
            for (size_t i = f.coeffs().size(); i-- > 0;)
                acc = acc * x + quad_interval(f.coeff(i), prec);
            if (acc.width() <= target && x.width() <= target)
                return acc.contains_zero() && x.overlaps(claimed);
        } catch (const TowerPrecisionError&) {
        } catch (const IntervalDivByZero&) {
        }
    }
    throw TowerPrecisionError("tower verification did not converge");
}

/**
 * Split every composite-index step n = p * m into a p-step followed by an
 * m-step ((a^(1/p))^(1/m) = a^(1/n)), recursively, so all indices are prime.
 * Field membership of every radicand is preserved: later steps refer to the
 * value of the final piece of each split chain.
 */
inline RadicalTower normalize_tower(const RadicalTower& t) {
    RadicalTower out;
    std::vector<size_t> remap(t.steps.size());
    for (size_t i = 0; i < t.steps.size(); ++i) {
        unsigned n = t.steps[i].index;
        if (n < 2) throw std::invalid_argument("normalize_tower: step index < 2");
        TowerExpr rad = t.steps[i].radicand.remap_steps(remap);
        while (!is_prime_index_u(n)) {
            unsigned p = 2;
            while (n % p != 0) ++p;
            out.steps.push_back({p, rad, t.steps[i].real});
            rad = TowerExpr::step(out.steps.size() - 1);
            n /= p;
        }
        out.steps.push_back({n, rad, t.steps[i].real});
        remap[i] = out.steps.size() - 1;
    }
    return out;
}

}  // namespace rre
