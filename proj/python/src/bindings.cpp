// Python extension: JSON documents in, JSON documents out. Integers cross the
// boundary as decimal strings, exactly as in the CLI reports.

#include "picard/report.hpp"

#include <pybind11/pybind11.h>

namespace py = pybind11;

namespace {

std::string dump(const picard::Json& j) { return picard::render(j, picard::OutputFormat::json); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact analysis of Picard lattices of IHS manifolds";
    m.attr("schema_version") = picard::report_schema_version;

    auto base = py::register_exception<picard::Error>(m, "PicardError", PyExc_RuntimeError);
    py::register_exception<picard::ParseError>(m, "ParseError", base.ptr());
    py::register_exception<picard::PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<picard::BoundExceededError>(m, "BoundExceededError", base.ptr());
    py::register_exception<picard::ContractViolation>(m, "ContractViolation", base.ptr());

    auto bind = [&](const char* name, picard::Json (*run)(const picard::InputSpec&), const char* doc) {
        m.def(
            name, [run](const std::string& text) { return dump(run(picard::parse_input(text))); }, py::arg("document"),
            doc);
    };
    bind("analyze", picard::run_analyze, "Full cone analysis report.");
    bind("enumerate", picard::run_enumerate, "Numerically exceptional classes up to the bound.");
    bind("alpha", picard::run_alpha, "Alpha classes from Pell equations.");
    bind("pell", picard::run_pell, "Solutions of x^2 - N y^2 = 1.");
    bind("rank2", picard::run_rank2, "Rank-2 boundary rays.");
    m.def(
        "reduce",
        [](const std::string& text, std::size_t max_steps) {
            return dump(picard::run_reduce(picard::parse_input(text), max_steps));
        },
        py::arg("document"), py::arg("max_steps") = picard::default_reduce_step_cap,
        "Reflect a vector into the chamber of a root set.");
    m.def(
        "plot_section", [](const std::string& text) { return picard::run_plot_section(picard::parse_input(text)); },
        py::arg("document"), "SVG section of a rank-3 analysis.");
}
