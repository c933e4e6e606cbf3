#ifndef WEIERCOUNT_MODFORMS_HPP
#define WEIERCOUNT_MODFORMS_HPP

#include <utility>
#include <vector>

#include "weiercount/qseries.hpp"

namespace weiercount {

/// Normalized Eisenstein series (constant term 1) of weight 4 or 6.
/// E4 = 1 + 240 sum sigma_3(n) q^n, E6 = 1 - 504 sum sigma_5(n) q^n.
QSeries eisenstein(int weight, long order);

/// Monomial basis E4^a E6^b of the level-1 modular forms of the given weight.
struct ModFormBasis {
    int weight;
    std::vector<std::pair<int, int>> monomials;  // (a, b) with 4a + 6b = weight, a descending
};

ModFormBasis mod_basis(int weight);
long mod_dimension(int weight);

/// q-expansion of E4^a E6^b.
QSeries basis_monomial_expansion(int a, int b, long order);

/// A modular form as a coefficient vector against mod_basis(weight).
struct ModForm {
    int weight;
    std::vector<Rational> coeffs;

    QSeries expansion(long order) const;
    bool operator==(const ModForm&) const = default;
};

/// The unique form of the given weight matching the coefficient constraints
/// {(exponent, value)}.  Requires exactly dim-many constraints at distinct
/// exponents; a singular constraint matrix is rejected as ambiguous.
ModForm solve_in_weight(int weight, const std::vector<std::pair<long, Rational>>& constraints);

/// eta(q)^{-12k} = q^{-k/2} prod_{n>=1} (1-q^n)^{-12k} as a Laurent series.
/// Only even k is supported; odd k would need a half-integral exponent.
QSeries eta_inverse_power(int k, long order);

}  // namespace weiercount

#endif
