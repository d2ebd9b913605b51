// Copyright 2026 The qcost authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcost/bench.hpp"
#include "qcost/cost.hpp"
#include "qcost/io.hpp"
#include "qcost/passes.hpp"
#include "qcost/simulate.hpp"
#include "qcost/templates.hpp"

namespace py = pybind11;

namespace {

qcost::PassOptions make_options(bool skip_pre_opt, int max_iters,
                                int move_window, bool verify) {
  qcost::PassOptions opts;
  opts.skip_pre_optimization = skip_pre_opt;
  opts.max_iterations = max_iters;
  opts.move_window = move_window;
  opts.verify_each_pass = verify;
  return opts;
}

py::dict report_dict(const qcost::CostReport& r) {
  py::dict d;
  d["gate_count"] = r.gate_count;
  d["linear_cost"] = r.linear_cost;
  d["quantum_cost"] = r.quantum_cost;
  d["garbage_bits"] = r.garbage_bits;
  d["constant_inputs"] = r.constant_inputs;
  d["total_cost"] = r.total_cost;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "quantum cost minimization for reversible and quantum circuits";

  m.def(
      "optimize",
      [](const std::string& circuit_text, bool skip_pre_opt, int max_iters,
         int move_window, bool verify, const std::string& templates_text) {
        const qcost::Circuit in = qcost::parse_circuit(circuit_text);
        std::vector<qcost::Template> extra;
        if (!templates_text.empty())
          extra = qcost::load_templates(templates_text);
        auto outcome = qcost::run_pipeline(
            in, extra, make_options(skip_pre_opt, max_iters, move_window, verify));
        qcost::CostReport rep;
        rep.gate_count = static_cast<int>(outcome.pre_optimized.size());
        rep.linear_cost = qcost::linear_cost(outcome.pre_optimized);
        rep.quantum_cost = qcost::quantum_cost(outcome.circuit);
        rep.garbage_bits = static_cast<int>(outcome.circuit.garbage_count());
        rep.constant_inputs = static_cast<int>(outcome.circuit.constant_count());
        rep.total_cost = rep.gate_count + rep.garbage_bits + rep.quantum_cost;
        py::dict out;
        out["circuit"] = qcost::write_circuit(outcome.circuit, true);
        out["quantum_cost"] = rep.quantum_cost;
        out["report"] = report_dict(rep);
        out["report_json"] = qcost::write_report(rep, outcome.trace);
        return out;
      },
      py::arg("circuit"), py::arg("skip_pre_opt") = false,
      py::arg("max_iters") = 20, py::arg("move_window") = 8,
      py::arg("verify") = true, py::arg("templates") = "",
      "Run the full cost-minimization pipeline on a circuit file text.");

  m.def(
      "cost_report",
      [](const std::string& circuit_text) {
        return report_dict(qcost::report(qcost::parse_circuit(circuit_text)));
      },
      py::arg("circuit"),
      "Raw cost metrics (decompose + merge only) of a circuit file text.");

  m.def(
      "quantum_cost",
      [](const std::string& circuit_text) {
        return qcost::quantum_cost(qcost::parse_circuit(circuit_text));
      },
      py::arg("circuit"));

  m.def(
      "linear_cost",
      [](const std::string& circuit_text) {
        return qcost::linear_cost(qcost::parse_circuit(circuit_text));
      },
      py::arg("circuit"));

  m.def(
      "check_equivalent",
      [](const std::string& a, const std::string& b, const std::string& mode) {
        return qcost::equivalent(qcost::parse_circuit(a),
                                 qcost::parse_circuit(b),
                                 mode == "primary"
                                     ? qcost::EquivalenceMode::kPrimaryOutputs
                                     : qcost::EquivalenceMode::kFull);
      },
      py::arg("a"), py::arg("b"), py::arg("mode") = "full",
      "Functional equivalence of two circuit file texts.");

  m.def(
      "circuit_permutation",
      [](const std::string& circuit_text) {
        return qcost::circuit_permutation(qcost::parse_circuit(circuit_text))
            .images;
      },
      py::arg("circuit"),
      "Basis-state permutation of a classical circuit (wire 0 is the most "
      "significant bit).");

  m.def("bench", []() {
    py::list rows;
    for (const auto& row : qcost::run_bench()) {
      py::dict d;
      d["name"] = row.name;
      d["expected"] = row.expected;
      d["got"] = row.got;
      d["upper_bound"] = row.upper_bound;
      d["passed"] = row.passed;
      rows.append(std::move(d));
    }
    return rows;
  });
}
