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

#include <string>
#include <vector>

#include "qcost/circuit.hpp"

namespace qcost {
namespace fixtures {

/// Controlled swap built from three Toffolis.
Circuit fredkin_three_toffoli();

/// The controlled-swap gate itself.
Circuit fredkin_gate();

/// The CNOT-Toffoli-CNOT controlled swap after decomposition, with the
/// trailing control-only CNOTs last. Marking only the third wire primary
/// makes exactly those two CNOTs dead.
Circuit fredkin_primitive_form();

/// Six-gate NOT/CNOT/Toffoli realization of the 3_17 benchmark function,
/// truth vector {7, 1, 4, 3, 0, 2, 6, 5}.
Circuit benchmark_3_17();
std::vector<std::uint32_t> benchmark_3_17_truth();

Circuit toffoli_gate();
Circuit peres_gate();
Circuit swap_three_cnots();

}  // namespace fixtures

/// One paper-reproduction check: expected vs. measured cost. Rows whose
/// expectation is an upper bound accept anything at or below it.
struct BenchRow {
  std::string name;
  int expected = 0;
  int got = 0;
  bool upper_bound = false;
  bool passed = false;
};

std::vector<BenchRow> run_bench();

}  // namespace qcost
