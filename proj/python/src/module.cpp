#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "steinberg_rsk/cli.hpp"

namespace py = pybind11;

namespace {

srsk::SignedYoungDiagram diagram_of(const std::vector<std::string>& rows) {
  return srsk::SignedYoungDiagram::from_strings(rows);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core: JSON command runner and a few direct combinatorial helpers";

  m.def(
      "run_command",
      [](const std::string& command, const std::string& input, std::optional<std::uint64_t> seed,
         std::optional<int> trials, int pmax, int qmax, bool strict) {
        srsk::CliOptions o{command, seed, trials, pmax, qmax, strict};
        srsk::CommandResult r;
        {
          py::gil_scoped_release release;
          r = srsk::run_command(o, input);
        }
        std::optional<std::string> payload;
        if (r.payload) payload = r.payload->dump();
        return py::make_tuple(static_cast<int>(r.code), payload, r.diagnostics);
      },
      py::arg("command"), py::arg("input") = "", py::arg("seed") = py::none(), py::arg("trials") = py::none(),
      py::arg("pmax") = 3, py::arg("qmax") = 3, py::arg("strict") = false,
      "Runs a subcommand; returns (exit_code, payload_json_or_None, diagnostics).");

  m.def("command_names", &srsk::command_names);
  m.def("pp_count", &srsk::pp_count, py::arg("p"), py::arg("q"));
  m.def(
      "count_syt", [](const std::vector<int>& parts) { return srsk::count_syt(srsk::Partition(parts)); },
      py::arg("shape"));
  m.def(
      "dominance_leq",
      [](const std::vector<int>& a, const std::vector<int>& b) {
        return srsk::dominance_leq(srsk::Partition(a), srsk::Partition(b));
      },
      py::arg("lhs"), py::arg("rhs"));
  m.def(
      "is_admissible", [](const std::vector<std::string>& rows) { return srsk::is_admissible(diagram_of(rows)); },
      py::arg("rows"));
  m.def(
      "z_shape", [](const std::vector<std::string>& rows) { return srsk::z_shape(diagram_of(rows)).parts(); },
      py::arg("rows"));
  m.attr("DEFAULT_PRIME") = srsk::kDefaultPrime;

  py::register_exception<srsk::SchemaError>(m, "SchemaError", PyExc_ValueError);
  py::register_exception<srsk::IncomparableSizes>(m, "IncomparableSizes", PyExc_ValueError);
}
