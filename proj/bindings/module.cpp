#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weiercount/lattice.hpp"
#include "weiercount/modforms.hpp"
#include "weiercount/pipeline.hpp"
#include "weiercount/report.hpp"
#include "weiercount/schubert.hpp"
#include "weiercount/tangency.hpp"

namespace py = pybind11;
using namespace weiercount;

namespace {

py::object big_int(const Integer& x) {
    return py::module_::import("builtins").attr("int")(x.get_str());
}

py::object fraction(const Rational& r) {
    return py::module_::import("fractions").attr("Fraction")(rational_str(r));
}

py::list series_coeffs(const QSeries& s) {
    py::list out;
    for (long n = s.lowest_exponent(); n < s.truncation_order(); ++n)
        out.append(fraction(s.coeff(n)));
    return out;
}

}  // namespace

PYBIND11_MODULE(_weiercount, mod) {
    mod.doc() = "exact curve counts on Weierstrass fibrations over hypersurfaces";

    mod.def(
        "pipeline",
        [](int m, int d, long order, bool gw) {
            CountReport rep = run_pipeline({m, d, order}, gw);
            py::object json = py::module_::import("json");
            return json.attr("loads")(emit_report(rep, ReportFormat::Json));
        },
        py::arg("m"), py::arg("d"), py::arg("order") = 24, py::arg("gw") = false,
        "Full pipeline report as a dict (the JSON schema of the CLI).");

    mod.def(
        "counts",
        [](int m, int d, long order) {
            CountReport rep = run_pipeline({m, d, order});
            py::dict out;
            for (auto& [n, r] : rep.counts) out[py::int_(n)] = fraction(r);
            return out;
        },
        py::arg("m"), py::arg("d"), py::arg("order") = 24,
        "Map n -> r_X(n), the smooth-rational-curve counts in class l + n f.");

    mod.def(
        "theta",
        [](const std::string& lattice, long order) {
            return series_coeffs(theta_root(root_lattice_from_name(lattice), order));
        },
        py::arg("lattice"), py::arg("order") = 24,
        "Theta-series coefficients of A1, A2, A3 or E8.");

    mod.def(
        "eisenstein",
        [](int weight, long order) { return series_coeffs(eisenstein(weight, order)); },
        py::arg("weight"), py::arg("order") = 24);

    mod.def(
        "fano_degree",
        [](int m, int d) { return big_int(fano_class(m, d).integrate()); },
        py::arg("m"), py::arg("d"),
        "Degree of the Fano scheme of lines on a degree-d hypersurface in P^{m+1}.");

    mod.def(
        "t_number",
        [](int m, int d, const std::vector<int>& mu) { return big_int(t_number(m, d, mu)); },
        py::arg("m"), py::arg("d"), py::arg("mu"),
        "Tangency number t_mu for the discriminant of the fibration over F(Y).");

    mod.def(
        "gw_coeffs",
        [](int m, int d, long order) { return series_coeffs(gw_series({m, d, order})); },
        py::arg("m"), py::arg("d"), py::arg("order") = 24,
        "Coefficients of phi(q) * eta(q)^{-12k}, starting at q^{-k/2}.");
}
