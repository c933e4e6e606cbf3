#ifndef WEIERCOUNT_PIPELINE_HPP
#define WEIERCOUNT_PIPELINE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weiercount/hodge.hpp"
#include "weiercount/modforms.hpp"
#include "weiercount/qseries.hpp"

namespace weiercount {

struct Config {
    int m = 2;
    int d = 2;
    long order = 24;  // q-expansion truncation

    int k() const { return 2 * m - d; }
    void validate() const;
    bool operator==(const Config&) const = default;
};

/// Polynomial in the theta series theta_1, theta_2, theta_3 of the root
/// lattices A_1, A_2, A_3 (weights 1, 2, 3), with a constant term.
struct ThetaPolynomial {
    Rational c_const{0}, c_t1{0}, c_t1sq{0}, c_t1cub{0}, c_t2{0}, c_t1t2{0}, c_t3{0};

    /// Largest weighted degree of a monomial with nonzero coefficient.
    int weighted_degree() const;
    /// Numeric q-expansion with each theta symbol replaced by its series.
    QSeries expand(long order) const;
    std::string str() const;
    bool operator==(const ThetaPolynomial&) const = default;
};

struct Diagnostic {
    std::string name;
    bool pass;
    std::string detail;
    bool operator==(const Diagnostic&) const = default;
};

struct CountReport {
    Config config;
    int k;
    std::vector<std::pair<std::vector<int>, Integer>> t_values;
    Rational c0;
    ModForm phi_basis_coeffs;
    QSeries phi_expansion{0, {}};
    QSeries theta_expansion{0, {}};
    ThetaPolynomial theta_poly;
    std::vector<std::pair<long, Rational>> counts;  // (n, r_X(n)) for k <= n < order
    std::optional<QSeries> gw_series;
    std::vector<Diagnostic> diagnostics;

    bool all_diagnostics_pass() const;
    Integer t_value(const std::vector<int>& mu) const;
    bool operator==(const CountReport&) const = default;
};

/// Full assembly of phi, Theta and the curve counts for k = 2m-d in {1, 2, 3}.
CountReport run_pipeline(const Config& config, bool with_gw = false);

/// Genus-0 Gromov-Witten series phi(q) * eta(q)^{-12k} (threefolds with even k,
/// i.e. k = 2 only).
QSeries gw_series(const Config& config);

/// The k = 4 shape of Theta(q) with symbolic coefficients: each theta monomial
/// maps to an integer combination of the unknowns a1, a2, a3, t4, t222, t23.
struct K4Template {
    // monomial name -> (symbol -> integer coefficient)
    std::map<std::string, std::map<std::string, long>> terms;
    std::string str() const;
};

K4Template k4_template();

}  // namespace weiercount

#endif
