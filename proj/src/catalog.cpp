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

#include "qcost/catalog.hpp"

namespace qcost {

int catalog_cost(GateKind kind) {
  switch (kind) {
    case GateKind::X:
    case GateKind::Cnot:
    case GateKind::V:
    case GateKind::Vdag:
    case GateKind::CV:
    case GateKind::CVdag:
    case GateKind::H:
    case GateKind::Merged:
    case GateKind::Swap:
      return 1;
    case GateKind::Peres:
      return 4;
    case GateKind::Toffoli:
    case GateKind::Fredkin:
      return 5;
  }
  throw UnknownKind();
}

bool is_self_inverse(GateKind kind) {
  switch (kind) {
    case GateKind::X:
    case GateKind::Cnot:
    case GateKind::Toffoli:
    case GateKind::Swap:
    case GateKind::Fredkin:
    case GateKind::H:
      return true;
    case GateKind::V:
    case GateKind::Vdag:
    case GateKind::CV:
    case GateKind::CVdag:
    case GateKind::Peres:
    case GateKind::Merged:
      return false;
  }
  throw UnknownKind();
}

std::vector<Gate> decompose(const Gate& gate) {
  switch (gate.kind) {
    case GateKind::Toffoli: {
      const WireId a = gate.controls[0];
      const WireId b = gate.controls[1];
      const WireId c = gate.targets[0];
      return {Gate::cv(b, c), Gate::cnot(a, b), Gate::cv_dag(b, c),
              Gate::cnot(a, b), Gate::cv(a, c)};
    }
    case GateKind::Peres: {
      // Toffoli sequence with the trailing CNOT folded in: appending
      // CNOT(a;b) cancels the decomposition's second CNOT(a;b) after
      // commuting it past CV(a;c).
      const WireId a = gate.controls[0];
      const WireId b = gate.targets[0];
      const WireId c = gate.targets[1];
      return {Gate::cv(b, c), Gate::cnot(a, b), Gate::cv_dag(b, c),
              Gate::cv(a, c)};
    }
    case GateKind::Fredkin: {
      const WireId a = gate.controls[0];
      const WireId b = gate.targets[0];
      const WireId c = gate.targets[1];
      std::vector<Gate> out{Gate::cnot(c, b)};
      for (Gate& g : decompose(Gate::toffoli(a, b, c))) out.push_back(std::move(g));
      out.push_back(Gate::cnot(c, b));
      return out;
    }
    case GateKind::Swap: {
      const WireId a = gate.targets[0];
      const WireId b = gate.targets[1];
      return {Gate::cnot(a, b), Gate::cnot(b, a), Gate::cnot(a, b)};
    }
    case GateKind::X:
    case GateKind::Cnot:
    case GateKind::V:
    case GateKind::Vdag:
    case GateKind::CV:
    case GateKind::CVdag:
    case GateKind::H:
    case GateKind::Merged:
      return {gate};
  }
  throw UnknownKind();
}

}  // namespace qcost
