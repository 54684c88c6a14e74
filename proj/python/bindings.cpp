#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hardysin/closed_form.hpp"
#include "hardysin/corpus.hpp"
#include "hardysin/error.hpp"
#include "hardysin/report.hpp"
#include "hardysin/spectral.hpp"
#include "hardysin/suites.hpp"
#include "hardysin/variational.hpp"

namespace py = pybind11;
using namespace hardysin;

namespace {

InequalityVariant parse_variant(const std::string& name) {
    for (const auto v : {InequalityVariant::InverseX2, InequalityVariant::InverseDist2,
                         InequalityVariant::Sine2PlusQuarter, InequalityVariant::X2PlusMixedBessel,
                         InequalityVariant::X2PlusBessel, InequalityVariant::Dist2PlusMixedBessel,
                         InequalityVariant::X2LeftVanishing}) {
        if (to_string(v) == name) return v;
    }
    throw DomainError("unknown inequality variant '" + name + "'");
}

py::dict solution_dict(const SolutionEval& e) {
    py::dict d;
    d["value"] = e.value;
    d["derivative"] = e.derivative;
    d["branch"] = to_string(e.branch);
    return d;
}

py::dict rayleigh(const std::string& potential, double coefficient, int n_basis, double shift,
                  std::optional<double> enrich_eps, int nodes_per_panel, int panels) {
    RayleighProblem p;
    p.n_basis = n_basis;
    p.potential_terms = {{{parse_potential(potential), coefficient}, 1.0}};
    if (shift != 0.0) p.potential_terms.push_back({{PotentialKind::Constant, shift}, 1.0});
    p.enrichment_eps = enrich_eps;
    p.quadrature = {nodes_per_panel, panels};
    GEVPResult r;
    {
        py::gil_scoped_release release;
        r = variational::min_rayleigh(p);
    }
    py::dict d;
    d["min_eigenvalue"] = r.min_eigenvalue;
    d["residual_norm"] = r.residual_norm;
    d["n_basis"] = r.n_basis;
    d["coefficients"] = r.coefficients;
    return d;
}

py::list run_suites(const std::vector<std::string>& names, const suites::Tolerances& overrides) {
    suites::Tolerances tol = suites::default_tolerances();
    for (const auto& [key, value] : overrides) {
        if (!tol.count(key)) throw DomainError("unknown tolerance key '" + key + "'");
        tol[key] = value;
    }
    std::vector<suites::SuiteResult> results;
    {
        py::gil_scoped_release release;
        results = suites::run_many(names, tol);
    }
    py::list out;
    for (const auto& r : results) {
        py::list rows;
        for (const auto& a : r.assertions) {
            py::dict row;
            row["invariant"] = a.invariant;
            row["value"] = a.value;
            row["relation"] = a.relation;
            row["threshold"] = a.threshold;
            row["passed"] = a.passed;
            rows.append(row);
        }
        py::dict d;
        d["name"] = r.name;
        d["passed"] = r.passed();
        d["seconds"] = r.seconds;
        d["assertions"] = rows;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_hardysin, m) {
    m.doc() = "Numerics for -d^2/dx^2 + (s^2 - 1/4)/sin^2 x on (0, pi)";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<PoleError>(m, "PoleError", base.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
    py::register_exception<QuadratureError>(m, "QuadratureError", base.ptr());
    py::register_exception<ExtrapolationError>(m, "ExtrapolationError", base.ptr());
    py::register_exception<NearPoleError>(m, "NearPoleError", base.ptr());
    py::register_exception<RootError>(m, "RootError", base.ptr());
    py::register_exception<NumericalError>(m, "NumericalError", base.ptr());
    py::register_exception<AdmissibilityError>(m, "AdmissibilityError", base.ptr());

    m.attr("schema_version") = report::kSchemaVersion;

    m.def("gamma", &specfun::gamma, py::arg("z"));
    m.def("digamma", &specfun::digamma, py::arg("z"));
    m.def(
        "hyp2f1", [](Complex a, Complex b, Complex c, double x) {
            return specfun::hyp2f1_series(a, b, c, x);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"));
    m.def("bessel_j", &specfun::bessel_j, py::arg("order"), py::arg("x"));

    m.def(
        "eigenvalues", [](double s, int n_max) { return spectral::eigenvalues(s, n_max).values; },
        py::arg("s"), py::arg("n_max"));
    m.def(
        "m_function", [](double s, Complex z, double guard) { return spectral::m_function(s, z, guard).m; },
        py::arg("s"), py::arg("z"), py::arg("guard") = spectral::kPoleGuard);
    m.def(
        "m_function_quotient", [](double s, Complex z) { return spectral::m_function_quotient(s, z); },
        py::arg("s"), py::arg("z"));
    m.def("scan_poles", &spectral::scan_poles, py::arg("s"), py::arg("z_min"), py::arg("z_max"),
          py::arg("step") = 0.05, py::arg("tol") = 1e-10, py::call_guard<py::gil_scoped_release>());
    m.def("bessel_constants", [] {
        const BesselConstants bc = spectral::bessel_constants();
        py::dict d;
        d["lamb_sqrt"] = bc.lamb_sqrt;
        d["lambda_DN0"] = bc.lambda_DN0;
        d["j01"] = bc.j01;
        d["lambda_F0"] = bc.lambda_F0;
        return d;
    });

    m.def(
        "eval_y",
        [](int j, double s, Complex z, double x) {
            return solution_dict(closed_form::eval_y(j, SpectralParam::make(s), z, x));
        },
        py::arg("j"), py::arg("s"), py::arg("z"), py::arg("x"));
    m.def(
        "principal_at_0",
        [](double s, double x) { return solution_dict(closed_form::eval_principal_0(SpectralParam::make(s), x)); },
        py::arg("s"), py::arg("x"));
    m.def(
        "nonprincipal_at_0",
        [](double s, double x) {
            return solution_dict(closed_form::eval_nonprincipal_0(SpectralParam::make(s), x));
        },
        py::arg("s"), py::arg("x"));
    m.def(
        "boundary_table",
        [](double s, Complex z) {
            const BoundaryTable t = closed_form::boundary_table(SpectralParam::make(s), z);
            py::dict d;
            d["y1_0"] = t.y1_0;
            d["y1p_0"] = t.y1p_0;
            d["y2_0"] = t.y2_0;
            d["y2p_0"] = t.y2p_0;
            d["y1_pi"] = t.y1_pi;
            d["y1p_pi"] = t.y1p_pi;
            d["y2_pi"] = t.y2_pi;
            d["y2p_pi"] = t.y2p_pi;
            d["determinant"] = t.determinant();
            return d;
        },
        py::arg("s"), py::arg("z"));

    m.def("min_rayleigh", &rayleigh, py::arg("potential") = "sine2", py::arg("coefficient") = 0.25,
          py::arg("n_basis") = 200, py::arg("shift") = 0.0, py::arg("enrich_eps") = py::none(),
          py::arg("nodes_per_panel") = 32, py::arg("panels") = 64);
    m.def("trial_quotient", &variational::trial_quotient, py::arg("eps"));
    m.def(
        "inequality_gap",
        [](const std::string& family, const corpus::Params& params, const std::string& variant) {
            return variational::inequality_gap(corpus::make(family, params, family), parse_variant(variant));
        },
        py::arg("family"), py::arg("params"), py::arg("variant"));
    m.def("inequality_variants", [] {
        std::vector<std::string> out;
        for (const auto v : {InequalityVariant::InverseX2, InequalityVariant::InverseDist2,
                             InequalityVariant::Sine2PlusQuarter, InequalityVariant::X2PlusMixedBessel,
                             InequalityVariant::X2PlusBessel, InequalityVariant::Dist2PlusMixedBessel,
                             InequalityVariant::X2LeftVanishing}) {
            out.push_back(to_string(v));
        }
        return out;
    });

    m.def("suite_names", &suites::suite_names);
    m.def("default_tolerances", &suites::default_tolerances);
    m.def("run_suites", &run_suites, py::arg("names"),
          py::arg("tolerances") = suites::Tolerances{});
}
