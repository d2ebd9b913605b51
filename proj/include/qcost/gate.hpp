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

#include <memory>
#include <string>
#include <vector>

#include "qcost/types.hpp"
#include "qcost/unitary.hpp"

namespace qcost {

/// Gate vocabulary. V is the square root of NOT (V*V = X, V*Vdag = I).
/// Merged carries an explicit 2x2 or 4x4 unitary built by fusing neighbours.
enum class GateKind {
  X,
  Cnot,
  Toffoli,
  Swap,
  Fredkin,
  Peres,
  V,
  Vdag,
  CV,
  CVdag,
  H,
  Merged,
};

std::string kind_name(GateKind kind);

/// One circuit element: a kind plus ordered control and target wires.
/// Controls and targets are pairwise disjoint; arity is fixed by the kind.
/// Peres acts on (control a; targets b, c) as b ^= a, c ^= a&b with the
/// original b, i.e. a Toffoli followed by a CNOT on the same wires.
struct Gate {
  GateKind kind;
  std::vector<WireId> controls;
  std::vector<WireId> targets;
  std::shared_ptr<const UnitaryMatrix> payload;  // Merged only
  std::uint64_t payload_hash = 0;  // content hash of the payload, 0 otherwise

  static Gate x(WireId target);
  static Gate cnot(WireId control, WireId target);
  static Gate toffoli(WireId control_a, WireId control_b, WireId target);
  static Gate swap_wires(WireId a, WireId b);
  static Gate fredkin(WireId control, WireId a, WireId b);
  static Gate peres(WireId a, WireId b, WireId c);
  static Gate v(WireId target);
  static Gate v_dag(WireId target);
  static Gate cv(WireId control, WireId target);
  static Gate cv_dag(WireId control, WireId target);
  static Gate h(WireId target);

  /// wires are the payload's qubit order, most significant first; they must be
  /// strictly ascending. The payload must be unitary and of dimension 2 or 4.
  static Gate merged(std::vector<WireId> wires, UnitaryMatrix payload);

  /// controls followed by targets, as stored.
  std::vector<WireId> wires_in_order() const;

  /// All wires the gate touches, ascending.
  std::vector<WireId> support() const;

  WireId max_wire() const;

  bool operator==(const Gate& other) const;

  std::string to_string() const;
};

}  // namespace qcost
