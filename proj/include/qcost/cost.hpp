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

#pragma once

#include "qcost/circuit.hpp"

namespace qcost {

/// Cost summary. total_cost = gate_count + garbage_bits + quantum_cost;
/// constant inputs are reported separately and do not enter the total.
struct CostReport {
  int gate_count = 0;
  int linear_cost = 0;
  int quantum_cost = 0;  // merged (nonlinear) cost
  int garbage_bits = 0;
  int constant_inputs = 0;
  int total_cost = 0;

  bool operator==(const CostReport& other) const = default;
};

/// Sum of catalog costs over the gates, no cross-gate optimization.
int linear_cost(const Circuit& circuit);

/// Gate count after decomposing to primitives and merging maximally. No
/// template search — this is the fast, deterministic "raw" metric.
int quantum_cost(const Circuit& circuit);

/// All fields populated from the circuit as given.
CostReport report(const Circuit& circuit);

}  // namespace qcost
