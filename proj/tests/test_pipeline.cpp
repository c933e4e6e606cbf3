#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weiercount/pipeline.hpp"
#include "weiercount/report.hpp"

using namespace weiercount;

TEST_CASE("config validation") {
    CHECK_THROWS_AS(run_pipeline({1, 1, 24}), std::invalid_argument);  // m too small
    CHECK_THROWS_AS(run_pipeline({2, 0, 24}), std::invalid_argument);  // d too small
    CHECK_THROWS_AS(run_pipeline({2, 4, 24}), std::invalid_argument);  // k = 0
    CHECK_THROWS_AS(run_pipeline({2, 2, 1}), std::invalid_argument);   // order <= k
    CHECK_THROWS_AS(run_pipeline({3, 2, 24}), std::invalid_argument);  // k = 4: symbolic only
    CHECK_THROWS_AS(run_pipeline({4, 3, 24}), std::invalid_argument);  // k = 5: unsupported
}

TEST_CASE("k = 1 pipeline: lines on a quintic threefold") {
    CountReport rep = run_pipeline({3, 5, 12});
    CHECK(rep.k == 1);
    CHECK(rep.c0 == 2875);
    CHECK(rep.phi_expansion.coeff(0) == 2875);
    CHECK(rep.phi_expansion.coeff(1) == Rational(2875) * 240);  // 2875 E4
    CHECK(rep.theta_expansion == QSeries::constant(Rational(2875), 12));
    CHECK(rep.all_diagnostics_pass());
    // r_X(n) = 2875 * (coeff of E4 - delta_0)
    CHECK(rep.counts.front() == std::pair<long, Rational>{1, Rational(2875) * 240});
}

TEST_CASE("k = 2 pipeline: the quadric-squared threefold") {
    CountReport rep = run_pipeline({2, 2, 24});
    CHECK(rep.k == 2);
    CHECK(rep.c0 == -2);
    CHECK(rep.t_value({2}) == 1056);
    // phi = -2 E4 E6
    CHECK(rep.phi_basis_coeffs.weight == 10);
    REQUIRE(rep.phi_basis_coeffs.coeffs.size() == 1);
    CHECK(rep.phi_basis_coeffs.coeffs[0] == -2);
    CHECK(rep.phi_expansion.coeff(0) == -2);
    CHECK(rep.phi_expansion.coeff(1) == 528);
    CHECK(rep.phi_expansion.coeff(2) == 270864);
    // Theta = -266 + 264 theta1
    CHECK(rep.theta_poly.c_const == -266);
    CHECK(rep.theta_poly.c_t1 == 264);
    CHECK(rep.theta_poly.c_t1sq == 0);
    CHECK(rep.theta_poly.weighted_degree() == 1);
    CHECK(rep.all_diagnostics_pass());
    for (auto& [n, r] : rep.counts) {
        CHECK(r.get_den() == 1);
        CHECK(r >= 0);
    }
}

TEST_CASE("k = 3 pipelines match their printed theta polynomials") {
    CountReport x18 = run_pipeline({2, 1, 24});
    CHECK(x18.phi_basis_coeffs.coeffs == std::vector<Rational>{{31, 48}, {113, 48}});
    CHECK(x18.theta_poly.c_const == 47253);
    CHECK(x18.theta_poly.c_t1 == -93582);
    CHECK(x18.theta_poly.c_t1sq == 46008);
    CHECK(x18.theta_poly.c_t2 == 324);
    CHECK(x18.all_diagnostics_pass());

    CountReport cubic = run_pipeline({3, 3, 24});
    CHECK(cubic.phi_basis_coeffs.coeffs == std::vector<Rational>{{433, 16}, {1439, 16}});
    CHECK(cubic.theta_poly.c_const == 2089215);
    CHECK(cubic.theta_poly.c_t1 == -4107510);
    CHECK(cubic.theta_poly.c_t1sq == 1969272);
    CHECK(cubic.theta_poly.c_t2 == 49140);
    CHECK(cubic.all_diagnostics_pass());
}

TEST_CASE("degree shift: phi - Theta vanishes below q^k") {
    for (auto [m, d] : {std::pair{2, 2}, std::pair{2, 1}, std::pair{3, 3}, std::pair{2, 3}}) {
        CountReport rep = run_pipeline({m, d, 12});
        for (long n = 0; n < rep.k; ++n)
            CHECK(rep.phi_expansion.coeff(n) == rep.theta_expansion.coeff(n));
        CHECK(rep.theta_expansion.coeff(0) == rep.c0);
    }
}

TEST_CASE("re-solving phi from a different constraint pair gives the same form") {
    CountReport rep = run_pipeline({2, 1, 12});
    // original constraints were exponents {0, 2}; re-pin from {0, 1}
    ModForm again = solve_in_weight(16, {{0, rep.c0}, {1, rep.phi_expansion.coeff(1)}});
    CHECK(again == rep.phi_basis_coeffs);
}

TEST_CASE("GW twist") {
    QSeries gw = gw_series({2, 2, 24});
    CHECK(gw.lowest_exponent() == -1);
    CHECK(gw.coeff(-1) == -2);
    CHECK(gw.coeff(0) == 480);  // -2*24 + 528
    CHECK_THROWS_AS(gw_series({2, 1, 24}), std::invalid_argument);  // odd k
    CHECK_THROWS_AS(run_pipeline({2, 1, 24}, true), std::invalid_argument);
}

TEST_CASE("k = 4 symbolic template") {
    K4Template t = k4_template();
    CHECK(t.terms.at("theta3") == std::map<std::string, long>{{"t4", 1}});
    CHECK(t.terms.at("theta1^3") == std::map<std::string, long>{{"t222", 1}});
    CHECK(t.terms.at("theta1*theta2") == std::map<std::string, long>{{"t23", 1}});
    CHECK(t.terms.at("theta1").at("t4") == 18);
    CHECK(t.str().find("theta3") != std::string::npos);
}

TEST_CASE("theta polynomial expansion agrees with direct substitution") {
    ThetaPolynomial p;
    p.c_const = Rational(-266);
    p.c_t1 = Rational(264);
    QSeries expanded = p.expand(10);
    CHECK(expanded.coeff(0) == -2);        // -266 + 264
    CHECK(expanded.coeff(1) == 264 * 2);   // theta1 counts the two A1 roots
}

TEST_CASE("JSON report round trip") {
    for (auto [m, d] : {std::pair{2, 2}, std::pair{2, 1}}) {
        CountReport rep = run_pipeline({m, d, 10}, m == 2 && d == 2);
        std::string json = emit_report(rep, ReportFormat::Json);
        CountReport back = parse_report(json);
        CHECK(back == rep);
        CHECK(emit_report(back, ReportFormat::Json) == json);
    }
}

TEST_CASE("JSON schema essentials") {
    CountReport rep = run_pipeline({2, 2, 8});
    std::string json = emit_report(rep, ReportFormat::Json);
    CHECK(json.find("\"c0\": \"-2\"") != std::string::npos);
    CHECK(json.find("\"t\"") != std::string::npos);
    CHECK(json.find("\"2\": 1056") != std::string::npos);
    CHECK(json.find("\"phi_basis\"") != std::string::npos);
    CHECK(json.find("\"theta_poly\"") != std::string::npos);
    CHECK(json.find("\"diagnostics\"") != std::string::npos);
}

TEST_CASE("text report prints the theta polynomial") {
    CountReport rep = run_pipeline({2, 2, 8});
    std::string text = emit_report(rep, ReportFormat::Text);
    CHECK(text.find("Θ(q) = -266 + 264*θ1") != std::string::npos);
    CHECK(text.find("r_X(2) = 270864") != std::string::npos);  // theta1 has no q^2 term
}
