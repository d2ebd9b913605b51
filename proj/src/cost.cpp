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

#include "qcost/cost.hpp"

#include "qcost/catalog.hpp"
#include "qcost/passes.hpp"

namespace qcost {

int linear_cost(const Circuit& circuit) {
  int sum = 0;
  for (const Gate& g : circuit.gates()) sum += catalog_cost(g.kind);
  return sum;
}

int quantum_cost(const Circuit& circuit) {
  // decompose + merge only; template search belongs to the pipeline
  static const PassOptions metric_opts{};
  return static_cast<int>(
      pass_merge(pass_decompose(circuit), metric_opts).size());
}

CostReport report(const Circuit& circuit) {
  CostReport r;
  r.gate_count = static_cast<int>(circuit.size());
  r.linear_cost = linear_cost(circuit);
  r.quantum_cost = quantum_cost(circuit);
  r.garbage_bits = static_cast<int>(circuit.garbage_count());
  r.constant_inputs = static_cast<int>(circuit.constant_count());
  r.total_cost = r.gate_count + r.garbage_bits + r.quantum_cost;
  return r;
}

}  // namespace qcost
