#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "spectile/cli.hpp"
#include "spectile/errors.hpp"
#include "spectile/exactnum.hpp"
#include "spectile/search.hpp"

namespace py = pybind11;
using namespace spectile;

namespace {

// Results cross the boundary as JSON text; the Python package decodes them.
std::string search_json(std::int64_t d_max, std::int64_t grid, unsigned jobs) {
  search::SearchOptions options;
  options.d_max = d_max;
  options.grid = grid;
  options.jobs = jobs;
  cli::Json lines = cli::Json::array();
  search::exceptional_search(options, [&](const std::vector<search::ConfigResult>& configs,
                                          const search::DSummary& summary) {
    for (const auto& c : configs) lines.push_back(c.to_json());
    lines.push_back(summary.to_json());
  });
  return lines.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact spectral and tiling checks for finite unions of intervals";

  auto base = py::register_exception<Error>(m, "SpectileError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvalidGeometry>(m, "InvalidGeometry", base.ptr());
  py::register_exception<InvalidSpectrum>(m, "InvalidSpectrum", base.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());

  m.def("verify", [](const std::string& omega, const std::string& spectrum) {
    return cli::verify_json(omega, spectrum).dump();
  }, py::arg("omega"), py::arg("spectrum"));
  m.def("tiles", [](const std::string& omega, std::optional<std::int64_t> p_max) {
    return cli::tiles_json(omega, p_max).dump();
  }, py::arg("omega"), py::arg("p_max") = py::none());
  m.def("classify2", [](const std::string& omega, const std::string& spectrum) {
    return cli::classify_json(omega, spectrum, 2).dump();
  }, py::arg("omega"), py::arg("spectrum"));
  m.def("classify3", [](const std::string& omega, const std::string& spectrum) {
    return cli::classify_json(omega, spectrum, 3).dump();
  }, py::arg("omega"), py::arg("spectrum"));
  m.def("gv", [](const std::string& exponents) { return cli::gv_json(exponents).dump(); }, py::arg("exponents"));
  m.def("torus", [](const std::string& system, std::int64_t order, unsigned jobs) {
    py::gil_scoped_release release;
    return cli::torus_json(system, order, jobs).dump();
  }, py::arg("system"), py::arg("order"), py::arg("jobs") = 1);
  m.def("search", [](std::int64_t d_max, std::int64_t grid, unsigned jobs) {
    py::gil_scoped_release release;
    return search_json(d_max, grid, jobs);
  }, py::arg("d_max") = 6, py::arg("grid") = 0, py::arg("jobs") = 1);
  m.def("cyclotomic_poly", [](std::uint64_t n) {
    std::vector<long> out;
    for (const auto& c : exactnum::cyclotomic_poly(n).coeffs) out.push_back(c.get_si());
    return out;
  }, py::arg("n"), "Coefficients of the n-th cyclotomic polynomial, constant term first.");
}
