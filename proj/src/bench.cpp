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

#include "qcost/bench.hpp"

#include "qcost/cost.hpp"
#include "qcost/passes.hpp"
#include "qcost/simulate.hpp"

namespace qcost {
namespace fixtures {

Circuit fredkin_three_toffoli() {
  Circuit c(3);
  c.add(Gate::toffoli(0, 2, 1));
  c.add(Gate::toffoli(0, 1, 2));
  c.add(Gate::toffoli(0, 2, 1));
  return c;
}

Circuit fredkin_gate() {
  Circuit c(3);
  c.add(Gate::fredkin(0, 1, 2));
  return c;
}

Circuit fredkin_primitive_form() {
  // decompose([CNOT(2;1), TOFFOLI(0,1;2), CNOT(2;1)]) with CV(0;2) commuted
  // left past the second CNOT(0;1)
  Circuit c(3);
  c.add(Gate::cnot(2, 1));
  c.add(Gate::cv(1, 2));
  c.add(Gate::cnot(0, 1));
  c.add(Gate::cv_dag(1, 2));
  c.add(Gate::cv(0, 2));
  c.add(Gate::cnot(0, 1));
  c.add(Gate::cnot(2, 1));
  return c;
}

Circuit benchmark_3_17() {
  Circuit c(3);
  c.add(Gate::x(0));
  c.add(Gate::cnot(2, 0));
  c.add(Gate::cnot(0, 1));
  c.add(Gate::toffoli(0, 1, 2));
  c.add(Gate::toffoli(1, 2, 0));
  c.add(Gate::cnot(1, 0));
  return c;
}

std::vector<std::uint32_t> benchmark_3_17_truth() {
  return {7, 1, 4, 3, 0, 2, 6, 5};
}

Circuit toffoli_gate() {
  Circuit c(3);
  c.add(Gate::toffoli(0, 1, 2));
  return c;
}

Circuit peres_gate() {
  Circuit c(3);
  c.add(Gate::peres(0, 1, 2));
  return c;
}

Circuit swap_three_cnots() {
  Circuit c(2);
  c.add(Gate::cnot(0, 1));
  c.add(Gate::cnot(1, 0));
  c.add(Gate::cnot(0, 1));
  return c;
}

}  // namespace fixtures

std::vector<BenchRow> run_bench() {
  std::vector<BenchRow> rows;
  const auto add = [&rows](std::string name, int expected, int got,
                           bool upper_bound, bool extra_ok) {
    BenchRow row{std::move(name), expected, got, upper_bound, false};
    row.passed = extra_ok && (upper_bound ? got <= expected : got == expected);
    rows.push_back(std::move(row));
  };

  PassOptions defaults;

  {
    const Circuit in = fixtures::fredkin_three_toffoli();
    const auto [out, trace] = pipeline(in, {}, defaults);
    const bool equiv = equivalent(out, fixtures::fredkin_gate(),
                                  EquivalenceMode::kFull);
    add("fredkin", 5, quantum_cost(out), false, equiv);
  }
  {
    PassOptions opts;
    opts.skip_pre_optimization = true;
    const Circuit in = fixtures::fredkin_three_toffoli();
    const auto [out, trace] = pipeline(in, {}, opts);
    const bool equiv = equivalent(out, fixtures::fredkin_gate(),
                                  EquivalenceMode::kFull);
    add("fredkin-no-preopt", 11, quantum_cost(out), true, equiv);
  }
  {
    const Circuit in = fixtures::benchmark_3_17();
    const bool truth_ok =
        circuit_permutation(in).images == fixtures::benchmark_3_17_truth();
    const auto [out, trace] = pipeline(in, {}, defaults);
    const bool equiv = equivalent(out, in, EquivalenceMode::kFull);
    add("3_17", 7, quantum_cost(out), true, truth_ok && equiv);
  }
  {
    const Circuit in = fixtures::toffoli_gate();
    add("toffoli", 5, quantum_cost(in), false, true);
  }
  {
    const Circuit in = fixtures::peres_gate();
    add("peres", 4, quantum_cost(in), false, true);
  }
  {
    const Circuit in = fixtures::swap_three_cnots();
    add("swap-3cnot", 1, quantum_cost(in), false, true);
  }
  return rows;
}

}  // namespace qcost
