/// @file cyclotomic.hpp
/// @brief Cyclotomic polynomials over Q by recursive exact division of X^n - 1.
#pragma once

#include <map>

#include "rre/polynomial.hpp"

namespace rre {

inline Polynomial<Rational> cyclotomic_poly(unsigned n) {
    if (n == 0) throw std::domain_error("cyclotomic_poly: n = 0");
    if (n > 5000) throw std::domain_error("cyclotomic_poly: n too large");
    // Phi_n = (X^n - 1) / prod_{d | n, d < n} Phi_d
    std::map<unsigned, Polynomial<Rational>> phi;
    for (unsigned m = 1; m <= n; ++m) {
        if (n % m != 0) continue;
        Polynomial<Rational> num = Polynomial<Rational>::monomial(Rational(1), m) -
                                   Polynomial<Rational>::constant(Rational(1));
        for (auto& [d, f] : phi) {
            if (m % d != 0) continue;
            auto [q, r] = num.divmod(f);
            if (!r.is_zero()) throw std::logic_error("cyclotomic_poly: non-exact division");
            num = q;
        }
        phi.emplace(m, std::move(num));
    }
    return phi.at(n);
}

}  // namespace rre
