#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lkd/heckeparse.hpp"
#include "lkd/suites.hpp"

namespace py = pybind11;
using namespace lkd;

namespace {

std::string eval_to_string(const std::string& type, const std::string& expr) {
    const RootDatum& d = RootDatum::from_label(type);
    HeckeAlgebra h(d);
    return eval_expr(parse_hecke_expr(expr, d), h).to_string();
}

}  // namespace

PYBIND11_MODULE(_lkdual, m) {
    m.doc() = "exact checks for Hecke-algebra dualities and linear Koszul duality";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const HeckeParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const HeckeEvalError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("hecke_eval", &eval_to_string, py::arg("type"), py::arg("expr"),
          "Evaluate an expression in the Bernstein basis and render the result.\n"
          "The grammar admits v, integers, theta[..], T[i], +, -, *, ^-1 and the\n"
          "morphisms IM(..), iota(..), KIM(..).");

    m.def(
        "hecke_equal",
        [](const std::string& type, const std::string& lhs, const std::string& rhs) {
            const RootDatum& d = RootDatum::from_label(type);
            HeckeAlgebra h(d);
            return eval_expr(parse_hecke_expr(lhs, d), h) == eval_expr(parse_hecke_expr(rhs, d), h);
        },
        py::arg("type"), py::arg("lhs"), py::arg("rhs"),
        "Exact equality of two expressions over Z[v, v^-1].");

    m.def(
        "verify_hecke",
        [](const std::string& type, int weight_bound, int trials, std::uint64_t seed,
           const std::string& spec) {
            HeckeSuiteParams p;
            p.type = type;
            p.weight_bound = weight_bound;
            p.trials = trials;
            p.seed = seed;
            p.spec_override = spec;
            return run_hecke_suite(p).to_json();
        },
        py::arg("type") = "A2", py::arg("weight_bound") = 2, py::arg("trials") = 50,
        py::arg("seed") = 1, py::arg("spec") = "",
        "Run the Hecke-algebra suite; returns the JSON report.");

    m.def(
        "verify_koszul",
        [](int dim, int trials, std::uint64_t seed, int window_lo, int window_hi) {
            KoszulSuiteParams p;
            p.dim = dim;
            p.trials = trials;
            p.seed = seed;
            p.window_lo = window_lo;
            p.window_hi = window_hi;
            return run_koszul_suite(p).to_json();
        },
        py::arg("dim") = 2, py::arg("trials") = 25, py::arg("seed") = 1,
        py::arg("window_lo") = -10, py::arg("window_hi") = 10,
        "Run the Koszul-duality suite; returns the JSON report.");

    m.def(
        "verify_convolution",
        [](int dim, int fdim, int trials, std::uint64_t seed, int window_lo, int window_hi) {
            ConvolutionSuiteParams p;
            p.dim = dim;
            p.fdim = fdim;
            p.trials = trials;
            p.seed = seed;
            p.window_lo = window_lo;
            p.window_hi = window_hi;
            return run_convolution_suite(p).to_json();
        },
        py::arg("dim") = 1, py::arg("fdim") = -1, py::arg("trials") = 25, py::arg("seed") = 1,
        py::arg("window_lo") = -6, py::arg("window_hi") = 6,
        "Run the convolution suite; returns the JSON report.");
}
