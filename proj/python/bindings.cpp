#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "agtrace/bombieri.hpp"
#include "agtrace/cli.hpp"
#include "agtrace/theorem.hpp"

namespace py = pybind11;
using namespace agtrace;

namespace {

py::dict report_to_dict(const TheoremReport& rep) {
    py::dict d;
    d["p"] = rep.p;
    d["q"] = rep.q;
    d["m"] = rep.m;
    d["curve"] = rep.curve_str;
    d["G"] = rep.divisor_str;
    d["n"] = rep.n;
    d["k"] = rep.k;
    d["genus"] = rep.genus;
    d["delta"] = rep.delta;
    d["h0"] = rep.h0;
    d["c1"] = rep.c1;
    d["c2"] = rep.c2;
    d["predicted"] = rep.predicted;
    d["computed"] = rep.computed;
    d["dimK"] = rep.dim_k;
    d["dimE"] = rep.dim_e;
    d["KeqE"] = rep.k_equals_e;
    d["match"] = rep.match;
    d["boundary"] = rep.boundary;
    d["eq3"] = rep.eq3;
    d["E_in_K"] = rep.e_in_k;
    d["bounds_ok"] = rep.bounds_ok;
    d["prop1_ok"] = rep.prop1_ok;
    d["delsarte_ok"] = rep.delsarte_ok;
    d["hasse_weil_ok"] = rep.hasse_weil_ok;
    d["ok"] = rep.ok();
    return d;
}

py::dict char_sum_to_dict(const CharSumResult& res) {
    py::dict d;
    d["counts"] = res.counts;
    d["t"] = res.t_poles;
    d["d_inf"] = res.d_inf;
    d["n_points"] = res.n_points;
    d["skipped"] = res.skipped;
    d["bound_sq"] = res.bound_sq;
    d["sum_sq_exact"] = res.sum_sq_exact;
    d["sum_abs"] = res.sum_abs;
    d["pass"] = res.pass;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "AG trace codes over extension field towers: construction, exact "
                "dimensions, kernel structure, and character-sum checks";

    // translators run most-recent-first: the derived class goes last
    py::register_exception<Error>(mod, "AgtraceError", PyExc_RuntimeError);
    py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);

    py::class_<FieldTower, std::shared_ptr<FieldTower>>(mod, "FieldTower")
        .def(py::init([](int p, int r, int m) { return std::make_shared<FieldTower>(p, r, m); }),
             py::arg("p"), py::arg("r"), py::arg("m"))
        .def_property_readonly("p", &FieldTower::p)
        .def_property_readonly("r", &FieldTower::r)
        .def_property_readonly("m", &FieldTower::m)
        .def_property_readonly("q", &FieldTower::q)
        .def_property_readonly("size", &FieldTower::size)
        .def_property_readonly("modulus", &FieldTower::modulus)
        .def_property_readonly("generator", &FieldTower::generator)
        .def("add", &FieldTower::add)
        .def("sub", &FieldTower::sub)
        .def("mul", &FieldTower::mul)
        .def("inv", &FieldTower::inv)
        .def("pow", &FieldTower::pow)
        .def("frobenius_q", &FieldTower::frobenius_q)
        .def("trace_to_subfield", &FieldTower::trace_to_subfield)
        .def("trace_to_prime", &FieldTower::trace_to_prime)
        .def("in_subfield", &FieldTower::in_subfield)
        .def("subfield_elements", &FieldTower::subfield_elements)
        .def("subfield_basis", &FieldTower::subfield_basis)
        .def("__repr__", [](const FieldTower& t) {
            std::ostringstream os;
            os << "FieldTower(p=" << t.p() << ", r=" << t.r() << ", m=" << t.m() << ")";
            return os.str();
        });

    py::class_<CurveModel>(mod, "CurveModel")
        .def_property_readonly("genus", &CurveModel::genus)
        .def("points",
             [](const CurveModel& c) {
                 py::list out;
                 for (const auto& p : rational_points(c)) {
                     if (p.at_infinity)
                         out.append(py::none());
                     else
                         out.append(py::make_tuple(p.x, p.y));
                 }
                 return out;
             })
        .def("__repr__", [](const CurveModel& c) { return c.to_string(); });

    py::class_<Divisor>(mod, "Divisor")
        .def_property_readonly("degree", &Divisor::degree)
        .def("__repr__", [](const Divisor& g) { return g.to_string(); });

    mod.def("curve", &parse_curve, py::arg("tower"), py::arg("spec"),
            "Parse 'p1' or 'weierstrass:a1,a3,a2,a4,a6'");
    mod.def("divisor", &parse_divisor, py::arg("curve"), py::arg("spec"),
            "Parse a divisor string like '2*inf' or '1*poly=2,1,1-1*inf'");
    mod.def("one_point_divisor", &one_point_divisor, py::arg("curve"), py::arg("k"));

    mod.def(
        "verify",
        [](const CurveModel& c, const Divisor& g, bool drop_zero_columns) {
            return report_to_dict(verify(c, g, drop_zero_columns));
        },
        py::arg("curve"), py::arg("divisor"), py::arg("drop_zero_columns") = false);

    mod.def(
        "predicted_dimension",
        [](const Divisor& g) { return predicted_dimension(g, *g.curve().tower()); },
        py::arg("divisor"));

    mod.def(
        "corollary_k_range",
        [](int genus, const TowerPtr& t) {
            const auto r = corollary_k_range(genus, *t);
            return py::make_tuple(r.lo, r.hi);
        },
        py::arg("genus"), py::arg("tower"));

    mod.def(
        "goppa_case",
        [](const TowerPtr& t, const std::vector<Elem>& coeffs) {
            Poly g(coeffs);
            poly_trim(g);
            const auto gc = goppa_case(g, *t);
            py::dict d;
            d["valid"] = gc.valid;
            d["r1"] = gc.r1;
            d["r2"] = gc.r2;
            d["s"] = gc.s;
            d["predicted"] = gc.predicted;
            return d;
        },
        py::arg("tower"), py::arg("coeffs"),
        "Analyze a Goppa polynomial given low-degree-first packed coefficients");

    mod.def(
        "char_sum_check",
        [](const CurveModel& c, const std::vector<Elem>& coeffs) {
            Poly f(coeffs);
            poly_trim(f);
            return char_sum_to_dict(char_sum_check(c, rf_p1(*c.tower(), f, {1})));
        },
        py::arg("curve"), py::arg("coeffs"),
        "Bombieri bound check for a polynomial on P^1");

    mod.def(
        "is_artin_schreier_degenerate",
        [](const CurveModel& c, const std::vector<Elem>& coeffs) {
            Poly f(coeffs);
            poly_trim(f);
            return is_artin_schreier_degenerate(c, rf_p1(*c.tower(), f, {1}));
        },
        py::arg("curve"), py::arg("coeffs"));

    mod.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli_main(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run a CLI command in-process; returns (exit_code, stdout, stderr)");
}
