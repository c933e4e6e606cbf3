#include "weiercount/pipeline.hpp"

#include <sstream>
#include <stdexcept>

#include "weiercount/lattice.hpp"
#include "weiercount/schubert.hpp"
#include "weiercount/tangency.hpp"

namespace weiercount {

void Config::validate() const {
    if (m < 2) throw std::invalid_argument("config: m must be >= 2");
    if (d < 1) throw std::invalid_argument("config: d must be >= 1");
    if (k() < 1) throw std::invalid_argument("config: k = 2m-d must be >= 1");
    if (order < k() + 1) throw std::invalid_argument("config: order must exceed k");
}

int ThetaPolynomial::weighted_degree() const {
    int deg = 0;
    if (c_t1 != 0) deg = std::max(deg, 1);
    if (c_t1sq != 0 || c_t2 != 0) deg = std::max(deg, 2);
    if (c_t1cub != 0 || c_t1t2 != 0 || c_t3 != 0) deg = std::max(deg, 3);
    return deg;
}

QSeries ThetaPolynomial::expand(long order) const {
    QSeries t1 = theta_root(RootLattice::A1, order);
    QSeries t2 = theta_root(RootLattice::A2, order);
    QSeries t3 = theta_root(RootLattice::A3, order);
    QSeries r = QSeries::constant(c_const, order);
    r = r + t1 * c_t1;
    r = r + (t1 * t1) * c_t1sq;
    r = r + (t1 * t1 * t1) * c_t1cub;
    r = r + t2 * c_t2;
    r = r + (t1 * t2) * c_t1t2;
    r = r + t3 * c_t3;
    return r;
}

std::string ThetaPolynomial::str() const {
    struct Term {
        const Rational& c;
        const char* name;
    };
    Term terms[] = {{c_const, ""},          {c_t1, "θ1"},
                    {c_t1sq, "θ1^2"},  {c_t1cub, "θ1^3"},
                    {c_t2, "θ2"},      {c_t1t2, "θ1*θ2"},
                    {c_t3, "θ3"}};
    std::ostringstream out;
    bool first = true;
    for (auto& t : terms) {
        if (t.c == 0) continue;
        Rational a = t.c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool named = t.name[0] != '\0';
        if (a != 1 || !named) out << rational_str(a);
        if (named) {
            if (a != 1) out << "*";
            out << t.name;
        }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

bool CountReport::all_diagnostics_pass() const {
    for (auto& d : diagnostics)
        if (!d.pass) return false;
    return true;
}

Integer CountReport::t_value(const std::vector<int>& mu) const {
    for (auto& [pattern, value] : t_values)
        if (pattern == mu) return value;
    throw std::out_of_range("CountReport::t_value: pattern not computed for this k");
}

namespace {

void check_shift_vanishing(CountReport& rep) {
    bool ok = true;
    std::ostringstream detail;
    for (long n = 0; n < rep.k; ++n) {
        Rational diff = rep.phi_expansion.coeff(n) - rep.theta_expansion.coeff(n);
        if (diff != 0) {
            ok = false;
            detail << "coeff(phi - Theta, " << n << ") = " << rational_str(diff) << "; ";
        }
    }
    rep.diagnostics.push_back(
        {"shift-vanishing", ok,
         ok ? "coeff(phi - Theta, n) = 0 for 0 <= n < k" : detail.str()});
}

void check_theta_constant(CountReport& rep) {
    bool ok = rep.theta_expansion.coeff(0) == rep.c0;
    rep.diagnostics.push_back({"theta-constant-term", ok,
                               ok ? "Theta(0) = c0"
                                  : "Theta(0) = " + rational_str(rep.theta_expansion.coeff(0)) +
                                        " != c0 = " + rational_str(rep.c0)});
}

void fill_counts(CountReport& rep) {
    bool ok = true;
    std::ostringstream detail;
    for (long n = rep.k; n < rep.config.order; ++n) {
        Rational r = rep.phi_expansion.coeff(n) - rep.theta_expansion.coeff(n);
        rep.counts.emplace_back(n, r);
        if (r.get_den() != 1) {
            ok = false;
            detail << "r_X(" << n << ") = " << rational_str(r) << " is not integral; ";
        }
    }
    rep.diagnostics.push_back(
        {"counts-integral", ok, ok ? "all r_X(n) integral" : detail.str()});
}

}  // namespace

CountReport run_pipeline(const Config& config, bool with_gw) {
    config.validate();
    int k = config.k();
    if (k == 4)
        throw std::invalid_argument(
            "run_pipeline: k = 4 has no numeric path; use the symbolic template");
    if (k > 4) throw std::invalid_argument("run_pipeline: k > 4 is unsupported");
    if (with_gw && k != 2)
        throw std::invalid_argument("run_pipeline: the GW twist needs k = 2");
    long order = config.order;

    CountReport rep;
    rep.config = config;
    rep.k = k;

    if (k == 1) {
        Integer n_lines = fano_class(config.m, config.d).integrate();
        rep.c0 = Rational(n_lines);
        rep.phi_basis_coeffs = ModForm{4, {Rational(n_lines)}};
        rep.phi_expansion = theta_root(RootLattice::E8, order) * Rational(n_lines);
        rep.theta_poly.c_const = Rational(n_lines);
        rep.theta_expansion = rep.theta_poly.expand(order);
    } else if (k == 2) {
        ConstantTermRecord ct = constant_term(config.m, config.d);
        rep.c0 = ct.c0;
        Integer t2 = t_number(config.m, config.d, {2});
        rep.t_values.emplace_back(std::vector<int>{2}, t2);
        rep.phi_basis_coeffs = solve_in_weight(10, {{0, rep.c0}});
        rep.phi_expansion = rep.phi_basis_coeffs.expansion(order);
        // Theta = c0 + (t2/4)(theta1 - 1)
        rep.theta_poly.c_t1 = Rational(t2) / 4;
        rep.theta_poly.c_const = rep.c0 - rep.theta_poly.c_t1;
        rep.theta_expansion = rep.theta_poly.expand(order);
        bool ok = rep.phi_expansion.coeff(1) == Rational(t2) / 2;
        rep.diagnostics.push_back(
            {"k2-isotropy-consistency", ok,
             ok ? "[phi]_1 = t_2 / 2"
                : "[phi]_1 = " + rational_str(rep.phi_expansion.coeff(1)) +
                      " but t_2 / 2 = " + rational_str(Rational(t2) / 2)});
    } else {
        ConstantTermRecord ct = constant_term(config.m, config.d);
        rep.c0 = ct.c0;
        Integer t22 = t_number(config.m, config.d, {2, 2});
        Integer t3 = t_number(config.m, config.d, {3});
        rep.t_values.emplace_back(std::vector<int>{2, 2}, t22);
        rep.t_values.emplace_back(std::vector<int>{3}, t3);
        rep.phi_basis_coeffs = solve_in_weight(16, {{0, rep.c0}, {2, Rational(t22)}});
        rep.phi_expansion = rep.phi_basis_coeffs.expansion(order);
        Rational phi1 = rep.phi_expansion.coeff(1);
        // Phi = (1/2)[phi]_1 theta1 + (1/4)t22 (theta1^2 - 2 theta1) + (1/6)t3 (theta2 - 3 theta1)
        rep.theta_poly.c_t1 = phi1 / 2 - Rational(t22) / 2 - Rational(t3) / 2;
        rep.theta_poly.c_t1sq = Rational(t22) / 4;
        rep.theta_poly.c_t2 = Rational(t3) / 6;
        // free constant fixed by Theta(0) = c0
        Rational poly_at_zero = phi1 / 2 - Rational(t22) / 4 - Rational(t3) / 3;
        rep.theta_poly.c_const = rep.c0 - poly_at_zero;
        rep.theta_expansion = rep.theta_poly.expand(order);
    }

    check_shift_vanishing(rep);
    check_theta_constant(rep);
    fill_counts(rep);
    if (with_gw) rep.gw_series = rep.phi_expansion * eta_inverse_power(k, order);
    return rep;
}

QSeries gw_series(const Config& config) {
    config.validate();
    if (config.k() != 2)
        throw std::invalid_argument("gw_series: only k = 2 threefolds are supported");
    CountReport rep = run_pipeline(config, true);
    return *rep.gw_series;
}

K4Template k4_template() {
    K4Template t;
    // a1 theta1 + a2 (theta1^2 - 2 theta1) + a3 (theta2 - 3 theta1)
    // + t4 (theta3 - 4 theta2 - 3 theta1^2 + 18 theta1)
    // + t222 (theta1^3 - 3 theta1) + t23 (theta1 theta2 - 4 theta1)
    t.terms["theta1"] = {{"a1", 1}, {"a2", -2}, {"a3", -3}, {"t4", 18}, {"t222", -3}, {"t23", -4}};
    t.terms["theta1^2"] = {{"a2", 1}, {"t4", -3}};
    t.terms["theta2"] = {{"a3", 1}, {"t4", -4}};
    t.terms["theta3"] = {{"t4", 1}};
    t.terms["theta1^3"] = {{"t222", 1}};
    t.terms["theta1*theta2"] = {{"t23", 1}};
    return t;
}

std::string K4Template::str() const {
    std::ostringstream out;
    const char* monomials[] = {"theta1", "theta1^2", "theta1^3",
                               "theta2", "theta1*theta2", "theta3"};
    bool first_mono = true;
    for (const char* mono : monomials) {
        auto it = terms.find(mono);
        if (it == terms.end()) continue;
        if (!first_mono) out << " + ";
        out << "(";
        bool first = true;
        for (auto& [sym, c] : it->second) {
            if (first) {
                if (c < 0) out << "-";
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            long a = c < 0 ? -c : c;
            if (a != 1) out << a << "*";
            out << sym;
            first = false;
        }
        out << ")*" << mono;
        first_mono = false;
    }
    return out.str();
}

}  // namespace weiercount
