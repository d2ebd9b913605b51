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

#include <vector>

#include "qcost/gate.hpp"

namespace qcost {

/// Catalog quantum cost of one gate kind. Every 1- or 2-qubit kind costs 1;
/// TOFFOLI and FREDKIN cost 5, PERES 4, SWAP 1.
int catalog_cost(GateKind kind);

/// True for the kinds that are their own inverse (X, CNOT, TOFFOLI, SWAP,
/// FREDKIN, H).
bool is_self_inverse(GateKind kind);

/// Expands a gate into 1-/2-qubit primitives with the same unitary:
///   TOFFOLI(a,b;c) -> CV(b;c) CNOT(a;b) CV+(b;c) CNOT(a;b) CV(a;c)
///   PERES(a,b,c)   -> CV(b;c) CNOT(a;b) CV+(b;c) CV(a;c)
///   FREDKIN(a;b,c) -> CNOT(c;b) TOFFOLI(a,b;c) CNOT(c;b), Toffoli expanded
///   SWAP(a,b)      -> CNOT(a;b) CNOT(b;a) CNOT(a;b)
/// 1-/2-qubit gates are returned unchanged.
std::vector<Gate> decompose(const Gate& gate);

}  // namespace qcost
