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

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qcost/circuit.hpp"
#include "qcost/cost.hpp"
#include "qcost/passes.hpp"

namespace qcost {

/// Circuit files are a RevLib-style subset:
///   .version / .numvars / .variables, optional .inputs/.outputs (ignored),
///   optional .constants ('0'/'1'/'-') and .garbage ('1' garbage, '-'
///   primary), then gates between .begin and .end. Gate tokens: t1/t2/t3,
///   f3, p3, swap, v, v+, v1, v1+, h, and u1/u2 for merged gates. Controls
///   come first on each gate line; tk with k >= 4 is rejected.
Circuit parse_circuit(std::string_view text);

/// Inverse of parse_circuit. Merged gates are only written (as u1/u2 lines
/// with 17-significant-digit complex entries) when allow_merged is set;
/// otherwise UnserializableGate.
std::string write_circuit(const Circuit& circuit, bool allow_merged = false);

/// Stable-key JSON:
///   {gate_count, linear_cost, quantum_cost, garbage_bits, constant_inputs,
///    total_cost, passes:[{name, gates_before, gates_after, cost_before,
///    cost_after}]}
std::string write_report(const CostReport& report, const PassTrace& trace);

/// One gate from whitespace-split tokens; `resolve` maps a wire name to its
/// index. Shared by the circuit and template parsers.
Gate parse_gate_tokens(const std::vector<std::string>& tokens, int line,
                       const std::function<WireId(const std::string&)>& resolve);

}  // namespace qcost
