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

#include <cstddef>
#include <string>
#include <vector>

#include "qcost/circuit.hpp"
#include "qcost/templates.hpp"

namespace qcost {

enum class CostObjective { kGateCount, kQuantumCost };

struct PassOptions {
  bool skip_pre_optimization = false;
  int max_iterations = 20;
  /// Bound on how many gates a candidate may be commuted past while searching
  /// for adjacency (deletion, merging and template matching all move gates).
  int move_window = 8;
  bool verify_each_pass = true;
  CostObjective cost_objective = CostObjective::kQuantumCost;
};

struct PassRecord {
  std::string name;
  std::size_t gates_before = 0;
  std::size_t gates_after = 0;
  int cost_before = 0;   // merged quantum cost
  int cost_after = 0;
  std::size_t rewrites = 0;
};

struct PassTrace {
  std::vector<PassRecord> records;

  std::size_t total_rewrites() const;
};

/// Bubbles the gate at `from` to position `to` through pairwise commuting
/// swaps; NotCommutable if any swap on the way fails the commutation check.
Circuit pass_move(const Circuit& circuit, std::size_t from, std::size_t to);

/// Removes adjacent (or move-adjacent within the window) gate pairs whose
/// product is the identity, plus single identity gates, until fixed point.
Circuit pass_delete(const Circuit& circuit, const PassOptions& opts,
                    std::size_t* rewrites = nullptr);

/// Greedy fixed-point template rewriting that strictly lowers
/// (linear cost, gate count) lexicographically — (gate count, linear cost)
/// under the GATE_COUNT objective.
Circuit pass_template_match(const Circuit& circuit,
                            const std::vector<Template>& store,
                            const PassOptions& opts,
                            std::size_t* rewrites = nullptr);

/// Replaces every gate acting on 3 wires by its primitive decomposition.
Circuit pass_decompose(const Circuit& circuit, std::size_t* rewrites = nullptr);

/// Template rewriting that accepts a substitution (even a longer one) exactly
/// when the whole-circuit merged quantum cost, evaluated on a tentatively
/// merged copy, strictly decreases.
Circuit pass_modified_template_match(const Circuit& circuit,
                                     const std::vector<Template>& store,
                                     const PassOptions& opts,
                                     std::size_t* rewrites = nullptr);

/// Greedily fuses adjacent (or move-adjacent) gates with combined support of
/// at most 2 wires into merged gates carrying the product unitary. At fixed
/// point no two such gates remain, so the gate count is the merged cost.
Circuit pass_merge(const Circuit& circuit, const PassOptions& opts,
                   std::size_t* rewrites = nullptr);

/// Backward liveness sweep from the primary-output wires: a gate whose target
/// wires are all dead is removed, otherwise its support becomes live.
/// Preserves equivalence on the primary outputs for basis inputs.
Circuit pass_garbage_elim(const Circuit& circuit,
                          std::size_t* rewrites = nullptr);

struct PipelineOutcome {
  Circuit circuit;        // optimized output
  PassTrace trace;
  Circuit pre_optimized;  // state before decomposition (the reversible level)
};

/// The whole optimization pipeline:
///   1. pre-optimization on composite gates (delete + template matching),
///      unless skipped;
///   2. garbage elimination and decomposition to 1-/2-qubit primitives
///      (garbage passes only run on circuits whose action is classical);
///   3. to fixed point: delete, modified template matching, merging, then
///      delete/template cleanup over the merged gates;
///   4. garbage elimination again, and the final count.
/// Every pass output is checked against its input with the simulation oracle
/// when verify_each_pass is set (VerificationError on failure — always a bug).
PipelineOutcome run_pipeline(const Circuit& circuit,
                             const std::vector<Template>& extra,
                             const PassOptions& opts);

std::pair<Circuit, PassTrace> pipeline(const Circuit& circuit,
                                       const std::vector<Template>& extra,
                                       const PassOptions& opts);

}  // namespace qcost
