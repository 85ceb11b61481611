// Python bindings for the freefactor core.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "freefactor/classify.hpp"
#include "freefactor/expansion.hpp"
#include "freefactor/fock.hpp"
#include "freefactor/reports.hpp"
#include "freefactor/verify.hpp"

namespace py = pybind11;
using namespace freefactor;

namespace {

Rational rat(const std::string& s) { return parse_rational(s); }

StateAlgebra algebra_from_json(const std::string& text) {
    auto v = parse_algebras_json(text);
    if (v.size() != 1) throw ParseError("expected exactly one algebra");
    return v[0];
}

}  // namespace

PYBIND11_MODULE(_freefactor, m) {
    m.doc() = "expansion factors and type invariants of free product algebras";

    py::register_exception<ParseError>(m, "FreefactorParseError");
    py::register_exception<ValidationError>(m, "FreefactorValidationError");

    py::class_<StateAlgebra>(m, "StateAlgebra")
        .def_property_readonly("label", [](const StateAlgebra& a) { return a.label; })
        .def_property_readonly("is_diffuse", &StateAlgebra::is_diffuse)
        .def("__repr__", [](const StateAlgebra& a) {
            return "<StateAlgebra " + (a.label.empty() ? std::string("?") : a.label) + ">";
        });

    m.def("diffuse_abelian", &StateAlgebra::diffuse_abelian, py::arg("label") = "");
    m.def(
        "commutative",
        [](const std::vector<std::string>& ws, const std::string& label) {
            std::vector<Rational> w;
            for (const auto& s : ws) w.push_back(rat(s));
            StateAlgebra a = StateAlgebra::commutative(std::move(w), label);
            validate(a);
            return a;
        },
        py::arg("weights"), py::arg("label") = "");
    m.def(
        "single_block",
        [](const std::vector<std::string>& ws, const std::string& label) {
            std::vector<Rational> w;
            for (const auto& s : ws) w.push_back(rat(s));
            StateAlgebra a = StateAlgebra::single_block(std::move(w), label);
            validate(a);
            return a;
        },
        py::arg("weights"), py::arg("label") = "");
    m.def("algebra_from_json", &algebra_from_json, py::arg("json_text"));
    m.def("psi_lambda", [](const std::string& lam) { return make_psi_lambda(rat(lam)); });
    m.def("phi_lambda", [](const std::string& lam) { return make_phi_lambda(rat(lam)); });
    m.def("uniform", &make_uniform, py::arg("n"));
    m.def("trace", &make_trace, py::arg("n"));

    m.def(
        "ef_squared",
        [](const StateAlgebra& a) -> std::string { return ef_exact(a).to_string(); },
        "exact ef^2 as a rational string, or 'inf'");
    m.def("ef", [](const StateAlgebra& a) { return ef_exact(a).ef(); },
          "ef as a float (inf for the diffuse algebra)");
    m.def("ef_certificate", &ef_lower_bound_certificate);

    m.def("invariant_group",
          [](const StateAlgebra& a) { return modular_invariant_group(a).to_string(); });
    m.def("invariant_generator",
          [](const StateAlgebra& a) { return modular_invariant_group(a).generator(); });

    m.def("classify", [](const StateAlgebra& a, const StateAlgebra& b) {
        FactorReport rep = classify_pair(a, b);
        py::dict d;
        d["certified"] = rep.certified;
        d["reason"] = rep.reason;
        d["ef_squared"] = py::make_tuple(rep.ef1.to_string(), rep.ef2.to_string());
        py::list log;
        for (const auto& h : rep.hypothesis_log) {
            py::dict e;
            e["name"] = h.name;
            e["pass"] = h.pass;
            e["detail"] = h.detail;
            log.append(e);
        }
        d["hypotheses"] = log;
        if (rep.certified) {
            d["t_invariant"] = rep.t_invariant->to_string();
            d["t_generator"] = rep.t_invariant->generator();
            d["type"] = rep.types->to_string();
        }
        d["report"] = render_report(rep);
        return d;
    });

    m.def("region_membership", [](const std::string& lam, const std::string& mu) {
        return region_membership(rat(lam), rat(mu));
    });
    m.def("figure1_csv", [](int samples) { return figure1_series(samples).to_string(); },
          py::arg("samples") = 200);
    m.def("figure2_csv", [](int grid) { return figure2_series(grid).to_string(); },
          py::arg("grid") = 50);

    m.def(
        "fock_report",
        [](const StateAlgebra& a, const StateAlgebra& b, int max_len) {
            TruncatedFock f = build_fock(a, b, max_len);
            py::dict d;
            d["dim"] = f.dim();
            d["expected_dim"] =
                expected_fock_dimension(f.comp[0].ho_dim, f.comp[1].ho_dim, max_len);
            return d;
        },
        py::arg("a"), py::arg("b"), py::arg("max_len") = 3);

    m.def(
        "verify",
        [](unsigned seed, double trial_scale) {
            VerifyOptions opt;
            opt.seed = seed;
            opt.trial_scale = trial_scale;
            py::list out;
            for (const auto& r : run_verification(opt)) {
                py::dict d;
                d["name"] = r.name;
                d["passed"] = r.passed;
                d["failed"] = r.failed;
                d["failures"] = r.failures;
                out.append(d);
            }
            return out;
        },
        py::arg("seed") = 20230727, py::arg("trial_scale") = 0.1);
}
