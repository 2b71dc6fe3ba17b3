#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "syntomic/basecase.hpp"
#include "syntomic/checks.hpp"
#include "syntomic/errors.hpp"
#include "syntomic/report.hpp"
#include "syntomic/syntomic.hpp"

namespace py = pybind11;
using namespace syntomic;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Syntomic cohomology of F_q[x]/x^e";

    py::class_<HomologyGroup>(m, "HomologyGroup")
        .def_readonly("factors", &HomologyGroup::factors)
        .def_readonly("multiplicity", &HomologyGroup::multiplicity)
        .def_readonly("free_rank", &HomologyGroup::free_rank)
        .def_readonly("saturated", &HomologyGroup::saturated)
        .def("is_zero", &HomologyGroup::is_zero)
        .def("__repr__", [](const HomologyGroup& g) { return "<HomologyGroup " + g.to_string(0) + ">"; });

    // Result documents cross the boundary as JSON text; the package decodes them.
    m.def(
        "zp_i_json",
        [](std::uint32_t p, int e, std::int64_t i, int f, std::optional<int> precision,
           std::optional<std::int64_t> max_weight, int jobs) {
            SyntomicOptions o;
            o.precision = precision;
            o.max_weight = max_weight;
            o.jobs = jobs;
            py::gil_scoped_release release;
            return to_json(zp_i(p, e, i, f, o)).dump();
        },
        py::arg("p"), py::arg("e"), py::arg("i"), py::arg("f") = 1, py::arg("precision") = py::none(),
        py::arg("max_weight") = py::none(), py::arg("jobs") = 1);

    m.def("closed_form_h1", &closed_form_h1, py::arg("p"), py::arg("i"), py::arg("e") = 2);
    m.def(
        "relative_k_group", [](std::uint32_t p, std::int64_t i, int f) { return relative_k_group(p, i, f); },
        py::arg("p"), py::arg("i"), py::arg("f") = 1);
    m.def("zp_i_point", &zp_i_point, py::arg("p"), py::arg("f"), py::arg("i"), py::arg("precision") = 8);
    m.def(
        "tc_json",
        [](std::uint32_t p, int f, std::int64_t n_min, std::int64_t n_max, int precision) {
            return tc_json(p, f, tc_homotopy(p, f, n_min, n_max, precision)).dump();
        },
        py::arg("p"), py::arg("f") = 1, py::arg("n_min") = -6, py::arg("n_max") = 12, py::arg("precision") = 8);
    m.def(
        "verify",
        [](std::vector<std::uint32_t> primes, std::int64_t i_max) {
            VerifyConfig c;
            c.primes = std::move(primes);
            c.i_max = i_max;
            std::vector<std::tuple<std::string, bool, std::string>> out;
            for (auto& r : run_verify(c)) out.emplace_back(r.name, r.pass, r.detail);
            return out;
        },
        py::arg("primes") = std::vector<std::uint32_t>{3, 5}, py::arg("i_max") = 8);

    py::register_exception<Error>(m, "SyntomicError", PyExc_RuntimeError);
}
