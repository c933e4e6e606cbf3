// Command-line front end: q-expansions, Schubert degrees, tangency numbers and
// the full curve-counting pipeline for Weierstrass fibrations over hypersurfaces.
#include <CLI11.hpp>
#include <iostream>

#include "weiercount/lattice.hpp"
#include "weiercount/modforms.hpp"
#include "weiercount/pipeline.hpp"
#include "weiercount/report.hpp"
#include "weiercount/schubert.hpp"
#include "weiercount/tangency.hpp"

using namespace weiercount;

namespace {

std::vector<int> parse_mu(const std::string& s) {
    std::vector<int> mu;
    std::istringstream in(s);
    std::string part;
    while (std::getline(in, part, ',')) mu.push_back(std::stoi(part));
    return mu;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"curve counts on Weierstrass fibrations over hypersurfaces"};
    app.require_subcommand(1);

    // pipeline
    auto* pipe = app.add_subcommand("pipeline", "run the full counting pipeline for (m, d)");
    Config config;
    std::string format = "text";
    bool with_gw = false;
    pipe->add_option("--m", config.m, "ambient dimension parameter (Y in P^{m+1})")->required();
    pipe->add_option("--d", config.d, "hypersurface degree")->required();
    pipe->add_option("--order", config.order, "q-expansion truncation order");
    pipe->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    pipe->add_flag("--gw", with_gw, "include the Gromov-Witten eta twist (k = 2 only)");

    // theta
    auto* theta = app.add_subcommand("theta", "theta series of a root lattice");
    std::string lattice_name;
    long theta_order = 24;
    theta->add_option("--lattice", lattice_name, "A1, A2, A3 or E8")->required();
    theta->add_option("--order", theta_order, "truncation order");

    // eisenstein
    auto* eis = app.add_subcommand("eisenstein", "q-expansion of E4 or E6");
    int weight = 4;
    long eis_order = 24;
    eis->add_option("--weight", weight, "4 or 6")->required();
    eis->add_option("--order", eis_order, "truncation order");

    // schubert
    auto* schub = app.add_subcommand("schubert", "Fano-scheme class and degree for (m, d)");
    int sm = 2, sd = 1;
    schub->add_option("--m", sm)->required();
    schub->add_option("--d", sd)->required();

    // tangency
    auto* tang = app.add_subcommand("tangency", "tangency-locus class, and t-number with --m/--d");
    int tk = 1;
    std::string mu_str;
    int tm = 0, td = 0;
    tang->add_option("--k", tk, "k in 1..4")->required();
    tang->add_option("--mu", mu_str, "tangency pattern: 2, 3 or 2,2")->required();
    tang->add_option("--m", tm, "ambient m (with --d: also print t_mu)");
    tang->add_option("--d", td, "hypersurface degree");

    auto* k4 = app.add_subcommand("template-k4", "symbolic Theta template for k = 4");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*pipe) {
            CountReport rep = run_pipeline(config, with_gw);
            std::cout << emit_report(rep,
                                     format == "json" ? ReportFormat::Json : ReportFormat::Text);
            if (!rep.all_diagnostics_pass()) return 3;
        } else if (*theta) {
            std::cout << theta_root(root_lattice_from_name(lattice_name), theta_order).str()
                      << "\n";
        } else if (*eis) {
            std::cout << eisenstein(weight, eis_order).str() << "\n";
        } else if (*schub) {
            SchubertClass f = fano_class(sm, sd);
            std::cout << "[F(Y)] = " << f.str() << "\n";
            std::cout << "degree = " << f.integrate().get_str() << "\n";
        } else if (*tang) {
            std::vector<int> mu = parse_mu(mu_str);
            TangencyRecord rec = tangency_class(tk, mu, tm >= 2 ? tm : 5);
            std::cout << "[T_{" << mu_str << "}] = " << rec.cls.str() << "\n";
            std::cout << "isotropy order = " << rec.isotropy_order << "\n";
            if (tm >= 2 && td >= 1)
                std::cout << "t_{" << mu_str << "} = " << t_number(tm, td, mu).get_str() << "\n";
        } else if (*k4) {
            std::cout << "Θ(q) = " << k4_template().str() << "\n";
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
