#include "weiercount/report.hpp"

#include <json.hpp>
#include <sstream>

namespace weiercount {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string integer_or_ratio_str(const Rational& r) {
    return rational_str(r);
}

ordered_json series_json(const QSeries& s) {
    ordered_json coeffs = ordered_json::array();
    for (long n = s.lowest_exponent(); n < s.truncation_order(); ++n)
        coeffs.push_back(rational_str(s.coeff(n)));
    return ordered_json{{"low", s.lowest_exponent()}, {"coeffs", std::move(coeffs)}};
}

QSeries series_from_json(const json& j) {
    long low = j.at("low").get<long>();
    std::vector<Rational> coeffs;
    for (auto& c : j.at("coeffs")) coeffs.push_back(rational_from_str(c.get<std::string>()));
    return QSeries(low, std::move(coeffs));
}

std::string mu_key(const std::vector<int>& mu) {
    std::ostringstream out;
    for (size_t i = 0; i < mu.size(); ++i) {
        if (i) out << ",";
        out << mu[i];
    }
    return out.str();
}

std::vector<int> mu_from_key(const std::string& key) {
    std::vector<int> mu;
    std::istringstream in(key);
    std::string part;
    while (std::getline(in, part, ',')) mu.push_back(std::stoi(part));
    return mu;
}

std::string mod_form_str(const ModForm& f) {
    ModFormBasis basis = mod_basis(f.weight);
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < f.coeffs.size(); ++i) {
        if (f.coeffs[i] == 0) continue;
        Rational c = f.coeffs[i];
        if (first) {
            if (c < 0) { out << "-"; c = -c; }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (c.get_den() == 1)
            out << rational_str(c);
        else
            out << "(" << rational_str(c) << ")";
        auto [a, b] = basis.monomials[i];
        if (a > 0) { out << "*E4"; if (a > 1) out << "^" << a; }
        if (b > 0) { out << "*E6"; if (b > 1) out << "^" << b; }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace

std::string emit_report(const CountReport& rep, ReportFormat format) {
    if (format == ReportFormat::Json) {
        ordered_json j;
        j["m"] = rep.config.m;
        j["d"] = rep.config.d;
        j["k"] = rep.k;
        j["order"] = rep.config.order;
        j["c0"] = rational_str(rep.c0);
        ordered_json t = ordered_json::object();
        for (auto& [mu, value] : rep.t_values) t[mu_key(mu)] = value.get_si();
        j["t"] = std::move(t);
        ordered_json basis = ordered_json::array();
        ModFormBasis mb = mod_basis(rep.phi_basis_coeffs.weight);
        for (size_t i = 0; i < rep.phi_basis_coeffs.coeffs.size(); ++i) {
            basis.push_back(ordered_json{{"a", mb.monomials[i].first},
                                         {"b", mb.monomials[i].second},
                                         {"coeff", rational_str(rep.phi_basis_coeffs.coeffs[i])}});
        }
        j["phi_basis"] = std::move(basis);
        j["phi"] = series_json(rep.phi_expansion);
        j["theta_poly"] = ordered_json{{"const", rational_str(rep.theta_poly.c_const)},
                                       {"theta1", rational_str(rep.theta_poly.c_t1)},
                                       {"theta1^2", rational_str(rep.theta_poly.c_t1sq)},
                                       {"theta1^3", rational_str(rep.theta_poly.c_t1cub)},
                                       {"theta2", rational_str(rep.theta_poly.c_t2)},
                                       {"theta1*theta2", rational_str(rep.theta_poly.c_t1t2)},
                                       {"theta3", rational_str(rep.theta_poly.c_t3)}};
        ordered_json counts = ordered_json::array();
        for (auto& [n, r] : rep.counts)
            counts.push_back(ordered_json{{"n", n}, {"r", integer_or_ratio_str(r)}});
        j["counts"] = std::move(counts);
        if (rep.gw_series) j["gw"] = series_json(*rep.gw_series);
        ordered_json diags = ordered_json::array();
        for (auto& d : rep.diagnostics)
            diags.push_back(ordered_json{{"name", d.name}, {"pass", d.pass}, {"detail", d.detail}});
        j["diagnostics"] = std::move(diags);
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "pipeline m=" << rep.config.m << " d=" << rep.config.d << " k=" << rep.k
        << " order=" << rep.config.order << "\n";
    out << "c0 = " << rational_str(rep.c0) << "\n";
    for (auto& [mu, value] : rep.t_values)
        out << "t_{" << mu_key(mu) << "} = " << value.get_str() << "\n";
    out << "φ = " << mod_form_str(rep.phi_basis_coeffs) << "\n";
    out << "φ(q) = " << rep.phi_expansion.str() << "\n";
    out << "Θ(q) = " << rep.theta_poly.str() << "\n";
    out << "Θ expansion = " << rep.theta_expansion.str() << "\n";
    for (auto& [n, r] : rep.counts) out << "r_X(" << n << ") = " << rational_str(r) << "\n";
    if (rep.gw_series) out << "GW(q) = " << rep.gw_series->str() << "\n";
    for (auto& d : rep.diagnostics)
        out << "diagnostic " << d.name << ": " << (d.pass ? "pass" : "FAIL") << " (" << d.detail
            << ")\n";
    return out.str();
}

CountReport parse_report(const std::string& json_text) {
    json j = json::parse(json_text);
    CountReport rep;
    rep.config.m = j.at("m").get<int>();
    rep.config.d = j.at("d").get<int>();
    rep.config.order = j.at("order").get<long>();
    rep.k = j.at("k").get<int>();
    rep.c0 = rational_from_str(j.at("c0").get<std::string>());
    for (auto& [key, value] : j.at("t").items())
        rep.t_values.emplace_back(mu_from_key(key), Integer(value.get<long>()));
    rep.phi_basis_coeffs.weight = 6 * rep.k - 2;
    for (auto& entry : j.at("phi_basis"))
        rep.phi_basis_coeffs.coeffs.push_back(
            rational_from_str(entry.at("coeff").get<std::string>()));
    rep.phi_expansion = series_from_json(j.at("phi"));
    const auto& tp = j.at("theta_poly");
    rep.theta_poly.c_const = rational_from_str(tp.at("const").get<std::string>());
    rep.theta_poly.c_t1 = rational_from_str(tp.at("theta1").get<std::string>());
    rep.theta_poly.c_t1sq = rational_from_str(tp.at("theta1^2").get<std::string>());
    rep.theta_poly.c_t1cub = rational_from_str(tp.at("theta1^3").get<std::string>());
    rep.theta_poly.c_t2 = rational_from_str(tp.at("theta2").get<std::string>());
    rep.theta_poly.c_t1t2 = rational_from_str(tp.at("theta1*theta2").get<std::string>());
    rep.theta_poly.c_t3 = rational_from_str(tp.at("theta3").get<std::string>());
    rep.theta_expansion = rep.theta_poly.expand(rep.config.order);
    for (auto& entry : j.at("counts"))
        rep.counts.emplace_back(entry.at("n").get<long>(),
                                rational_from_str(entry.at("r").get<std::string>()));
    if (j.contains("gw")) rep.gw_series = series_from_json(j.at("gw"));
    for (auto& entry : j.at("diagnostics"))
        rep.diagnostics.push_back({entry.at("name").get<std::string>(),
                                   entry.at("pass").get<bool>(),
                                   entry.at("detail").get<std::string>()});
    return rep;
}

}  // namespace weiercount
