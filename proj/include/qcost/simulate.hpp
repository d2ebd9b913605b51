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

#include <span>
#include <vector>

#include "qcost/circuit.hpp"
#include "qcost/gate.hpp"
#include "qcost/unitary.hpp"

namespace qcost {

/// Brute-force simulation of small circuits. This is the oracle every rewrite
/// is checked against: gates become dense matrices, serial composition is
/// matrix multiplication, and wire 0 is the most significant index bit.

/// controls ∪ targets, ascending.
std::vector<WireId> support(const Gate& gate);

/// The gate's matrix on its own wires, ordered controls-then-targets with the
/// first wire as the most significant local bit. Merged gates return their
/// payload.
UnitaryMatrix gate_unitary(const Gate& gate);

/// The gate's matrix over an ordered wire list that contains its support
/// (first listed wire = most significant local bit).
UnitaryMatrix gate_unitary_on(const Gate& gate, std::span<const WireId> wires);

/// Applies the gate in place to an amplitude vector over `wires` qubits.
void apply_gate(std::span<Complex> amplitudes, WireId wires, const Gate& gate);

/// Ordered product of embedded gate unitaries, leftmost gate applied first.
/// Throws OracleTooLarge above kUnitaryOracleMaxWires.
UnitaryMatrix circuit_unitary(const Circuit& circuit);

/// True for the kinds that permute basis states (X, CNOT, TOFFOLI, SWAP,
/// FREDKIN, PERES). Merged gates are classical exactly when their payload is a
/// permutation matrix.
bool is_classical_kind(GateKind kind);
bool gate_is_classical(const Gate& gate);
bool circuit_is_classical(const Circuit& circuit);

/// Image of one basis index under a classical gate.
std::uint32_t classical_image(const Gate& gate, WireId wires, std::uint32_t x);

/// The permutation of basis states realized by a classical circuit.
/// Throws NotClassical if a quantum-only gate is present, OracleTooLarge above
/// kPermutationOracleMaxWires.
Permutation circuit_permutation(const Circuit& circuit);

/// True iff swapping the two adjacent gates leaves the circuit function
/// unchanged: disjoint supports commute trivially, otherwise the commutator is
/// tested on the joint support.
bool commutes(const Gate& a, const Gate& b);

/// A gate sequence whose product is the conjugate transpose of the gate. All
/// kinds invert to a single gate except PERES, whose inverse is its reversed
/// and inverted 4-gate decomposition.
std::vector<Gate> inverse(const Gate& gate);

enum class EquivalenceMode {
  kFull,            // unitaries equal up to one global phase
  kPrimaryOutputs,  // equal on non-garbage outputs for all valid basis inputs
};

/// Functional-equivalence oracle. PRIMARY_OUTPUTS requires compatible roles
/// and, for non-classical circuits, garbage wires that separate from the
/// primary wires on every valid basis input (otherwise RoleMismatch).
bool equivalent(const Circuit& a, const Circuit& b, EquivalenceMode mode);

}  // namespace qcost
