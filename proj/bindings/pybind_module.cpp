#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "laumon/calogero.hpp"
#include "laumon/engine.hpp"
#include "laumon/geometry.hpp"
#include "laumon/intertwiner.hpp"
#include "laumon/verma.hpp"

namespace py = pybind11;
using namespace laumon;

namespace {

EquivParams make_params(int n, const std::vector<std::string>& xi, const std::string& eta,
                        const std::string& m) {
    EquivParams p;
    p.n = n;
    for (const auto& s : xi) p.xi.push_back(Rational::parse(s));
    p.eta = Rational::parse(eta);
    p.m = Rational::parse(m);
    if (static_cast<int>(p.xi.size()) != n) throw DimensionError("xi must have length n");
    return p;
}

py::object series_terms(const TruncatedSeries& s) {
    py::list out;
    for (const auto& [e, c] : s.terms()) {
        py::dict rec;
        rec["exponents"] = e;
        rec["value"] = c.str();
        out.append(rec);
    }
    return out;
}

ConventionLedger ledger_or_default(const std::string& ledger) {
    if (ledger.empty()) return ConventionLedger{};
    return ConventionLedger::parse(ledger);
}

} // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "exact-rational affine Laumon partition-function engine";

    py::register_exception<NonGenericError>(mod, "NonGenericError");

    py::class_<TruncatedSeries>(mod, "TruncatedSeries")
        .def(py::init<int, int>(), py::arg("nvars"), py::arg("bound"))
        .def_static("one", &TruncatedSeries::one)
        .def("set_coeff",
             [](TruncatedSeries& s, const Exp& e, const std::string& c) {
                 s.set_coeff(e, Rational::parse(c));
             })
        .def("coeff", [](const TruncatedSeries& s, const Exp& e) { return s.coeff(e).str(); })
        .def("terms", &series_terms)
        .def("nvars", &TruncatedSeries::nvars)
        .def("bound", &TruncatedSeries::bound)
        .def("__mul__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; })
        .def("__add__",
             [](const TruncatedSeries& a, const TruncatedSeries& b) {
                 TruncatedSeries r(a);
                 r += b;
                 return r;
             })
        .def("__eq__", [](const TruncatedSeries& a, const TruncatedSeries& b) { return a == b; })
        .def("inverse", &TruncatedSeries::inverse)
        .def("pow_rational",
             [](const TruncatedSeries& s, const std::string& alpha) {
                 return s.pow_rational(Rational::parse(alpha));
             })
        .def("__repr__", [](const TruncatedSeries& s) { return s.str(); });

    mod.def("window_monomial", &window_monomial, py::arg("n"), py::arg("i"), py::arg("j"));
    mod.def("weyl_delta", &weyl_delta, py::arg("n"), py::arg("D"));

    mod.def(
        "enumerate_fixed_points",
        [](int n, const Exp& d) {
            py::list out;
            for (const FixedPoint& fp : enumerate_fixed_points(n, d)) out.append(fp.columns);
            return out;
        },
        py::arg("n"), py::arg("d"));

    mod.def(
        "rhom_character",
        [](int n, const std::vector<std::vector<int>>& colsA,
           const std::vector<std::vector<int>>& colsB) {
            FixedPoint a{n, colsA}, b{n, colsB};
            py::list out;
            for (const auto& [k, c] : rhom_character(n, a, b).terms()) {
                py::dict rec;
                rec["t"] = k.t;
                rec["q"] = k.q;
                rec["qp"] = k.qp;
                rec["c"] = c;
                out.append(rec);
            }
            return out;
        },
        py::arg("n"), py::arg("fpA_columns"), py::arg("fpB_columns"));

    mod.def(
        "tangent_weights",
        [](int n, const std::vector<std::vector<int>>& cols, const std::vector<std::string>& xi,
           const std::string& eta, const std::string& m) {
            FixedPoint fp{n, cols};
            EquivParams p = make_params(n, xi, eta, m);
            py::list out;
            for (const Rational& w : tangent_weights(fp, p)) out.append(w.str());
            return out;
        },
        py::arg("n"), py::arg("columns"), py::arg("xi"), py::arg("eta"), py::arg("m"));

    mod.def(
        "localization_partition_function",
        [](int n, int D, const std::vector<std::string>& xi, const std::string& eta,
           const std::string& m, const std::string& ledger) {
            return localization_partition_function(make_params(n, xi, eta, m), D,
                                                   ledger_or_default(ledger).geom);
        },
        py::arg("n"), py::arg("D"), py::arg("xi"), py::arg("eta"), py::arg("m"),
        py::arg("ledger") = "");

    mod.def(
        "b_exponents",
        [](int n, const std::vector<std::string>& xi, const std::string& eta) {
            py::list out;
            for (const Rational& b : b_exponents(make_params(n, xi, eta, "0"))) out.append(b.str());
            return out;
        },
        py::arg("n"), py::arg("xi"), py::arg("eta"));

    mod.def(
        "eigenvalue_lambda",
        [](int n, const std::vector<std::string>& xi, const std::string& eta) {
            return eigenvalue_lambda(make_params(n, xi, eta, "0")).str();
        },
        py::arg("n"), py::arg("xi"), py::arg("eta"));

    mod.def(
        "reference_partition_function",
        [](int n, int D, const std::vector<std::string>& xi, const std::string& eta,
           const std::string& m, const std::string& ledger) {
            CMOperatorSpec spec{make_params(n, xi, eta, m), D, ledger_or_default(ledger).calogero};
            return reference_partition_function(spec);
        },
        py::arg("n"), py::arg("D"), py::arg("xi"), py::arg("eta"), py::arg("m"),
        py::arg("ledger") = "");

    mod.def(
        "verma_trace",
        [](int n, int D, const std::vector<std::string>& xi, const std::string& eta,
           const std::string& m) {
            EquivParams p = make_params(n, xi, eta, m);
            Intertwiner phi(p, D);
            return graded_trace([&](const VermaVector& u) { return phi.vertex_operator(u); }, n,
                                D);
        },
        py::arg("n"), py::arg("D"), py::arg("xi"), py::arg("eta"), py::arg("m"));

    mod.def("resolve_ledger", [](unsigned seed) { return resolve_ledger(seed).resolved.str(); },
            py::arg("seed") = 1u);

    mod.def(
        "run_verify",
        [](int n, int D, const std::vector<std::string>& xi, const std::string& eta,
           const std::string& m, unsigned seed) {
            RunConfig cfg;
            cfg.n = n;
            cfg.D = D;
            for (const auto& s : xi) cfg.xi.push_back(Rational::parse(s));
            cfg.eta = Rational::parse(eta);
            cfg.m = Rational::parse(m);
            cfg.mode = "verify";
            cfg.seed = seed;
            Report rep = run(cfg);
            return rep.to_json().dump();
        },
        py::arg("n"), py::arg("D"), py::arg("xi"), py::arg("eta"), py::arg("m"),
        py::arg("seed") = 1u);
}
