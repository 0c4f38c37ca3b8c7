#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "twzhu/backend_checks.hpp"
#include "twzhu/fusion.hpp"
#include "twzhu/runner.hpp"
#include "twzhu/scenario.hpp"
#include "twzhu/workspace.hpp"

namespace py = pybind11;
using namespace twzhu;

namespace {

py::tuple run_scenario(const Scenario& s, bool dump_tables, bool timing) {
  validate(s);
  RunResult r;
  {
    py::gil_scoped_release release;
    r = run(s, {dump_tables, timing});
  }
  return py::make_tuple(r.report.dump(), dump_tables ? r.tables.dump() : std::string(), r.passed);
}

}  // namespace

PYBIND11_MODULE(_twzhu, m) {
  m.doc() = "Exact twisted Zhu algebra and bimodule computations for the rank-one free boson.";
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.def(
      "run_text",
      [](const std::string& text, bool dump_tables, bool timing) {
        std::istringstream in(text);
        return run_scenario(parse_scenario(in), dump_tables, timing);
      },
      py::arg("text"), py::arg("dump_tables") = false, py::arg("timing") = false,
      "Runs a scenario given as text. Returns (report_json, tables_json, passed).");
  m.def(
      "run_file",
      [](const std::string& path, bool dump_tables, bool timing) {
        return run_scenario(parse_scenario_file(path), dump_tables, timing);
      },
      py::arg("path"), py::arg("dump_tables") = false, py::arg("timing") = false);

  m.def(
      "hom_dim",
      [](const std::string& g1, const std::string& g2, int N) {
        Workspace ws(2);
        return hom_dim(ws, parse_aut(g1), parse_aut(g2), N);
      },
      py::arg("g1"), py::arg("g2"), py::arg("cap"));
  m.def(
      "fusion_bound",
      [](const std::string& g1, const std::string& g2, const std::vector<int>& caps) {
        Workspace ws(2);
        const FusionBound fb = fusion_bound(ws, parse_aut(g1), parse_aut(g2), caps);
        return py::dict(py::arg("caps") = fb.caps, py::arg("dims") = fb.dims,
                        py::arg("tensor_dims") = fb.tensor_dims, py::arg("stable") = fb.stable);
      },
      py::arg("g1"), py::arg("g2"), py::arg("caps") = std::vector<int>{2, 4, 6, 8});
  m.def(
      "twisted_bottom_weight",
      []() {
        Heisenberg H(2);
        return rat_str(H.compute_bottom_weight(H.twisted()));
      },
      "o(omega) on the bottom of the theta-twisted module, as a fraction string.");
}
