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

#include "qcost/gate.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcost {

namespace {

void require_distinct(const std::vector<WireId>& wires) {
  for (std::size_t i = 0; i < wires.size(); ++i)
    for (std::size_t j = i + 1; j < wires.size(); ++j)
      if (wires[i] == wires[j])
        throw std::invalid_argument("gate wires must be pairwise distinct");
}

Gate make(GateKind kind, std::vector<WireId> controls,
          std::vector<WireId> targets) {
  Gate g{kind, std::move(controls), std::move(targets), nullptr};
  require_distinct(g.wires_in_order());
  return g;
}

}  // namespace

std::string kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::Cnot: return "CNOT";
    case GateKind::Toffoli: return "TOFFOLI";
    case GateKind::Swap: return "SWAP";
    case GateKind::Fredkin: return "FREDKIN";
    case GateKind::Peres: return "PERES";
    case GateKind::V: return "V";
    case GateKind::Vdag: return "V+";
    case GateKind::CV: return "CV";
    case GateKind::CVdag: return "CV+";
    case GateKind::H: return "H";
    case GateKind::Merged: return "MERGED";
  }
  throw UnknownKind();
}

Gate Gate::x(WireId target) { return make(GateKind::X, {}, {target}); }

Gate Gate::cnot(WireId control, WireId target) {
  return make(GateKind::Cnot, {control}, {target});
}

Gate Gate::toffoli(WireId control_a, WireId control_b, WireId target) {
  return make(GateKind::Toffoli, {control_a, control_b}, {target});
}

Gate Gate::swap_wires(WireId a, WireId b) {
  return make(GateKind::Swap, {}, {a, b});
}

Gate Gate::fredkin(WireId control, WireId a, WireId b) {
  return make(GateKind::Fredkin, {control}, {a, b});
}

Gate Gate::peres(WireId a, WireId b, WireId c) {
  return make(GateKind::Peres, {a}, {b, c});
}

Gate Gate::v(WireId target) { return make(GateKind::V, {}, {target}); }

Gate Gate::v_dag(WireId target) { return make(GateKind::Vdag, {}, {target}); }

Gate Gate::cv(WireId control, WireId target) {
  return make(GateKind::CV, {control}, {target});
}

Gate Gate::cv_dag(WireId control, WireId target) {
  return make(GateKind::CVdag, {control}, {target});
}

Gate Gate::h(WireId target) { return make(GateKind::H, {}, {target}); }

namespace {

std::uint64_t payload_content_hash(const UnitaryMatrix& m) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      const auto v = m.at(r, c);
      const auto* bytes = reinterpret_cast<const unsigned char*>(&v);
      for (std::size_t b = 0; b < sizeof(v); ++b) {
        h ^= bytes[b];
        h *= 1099511628211ull;
      }
    }
  }
  return h;
}

}  // namespace

Gate Gate::merged(std::vector<WireId> wires, UnitaryMatrix payload) {
  if (wires.empty() || wires.size() > 2)
    throw std::invalid_argument("merged gates act on 1 or 2 wires");
  if (!std::is_sorted(wires.begin(), wires.end()) ||
      (wires.size() == 2 && wires[0] == wires[1]))
    throw std::invalid_argument("merged gate wires must be strictly ascending");
  if (payload.dim() != (std::size_t{1} << wires.size()))
    throw std::invalid_argument("merged payload dimension does not match wires");
  if (!payload.is_unitary())
    throw std::invalid_argument("merged payload is not unitary");
  Gate g{GateKind::Merged, {}, std::move(wires),
         std::make_shared<const UnitaryMatrix>(std::move(payload)), 0};
  g.payload_hash = payload_content_hash(*g.payload);
  return g;
}

std::vector<WireId> Gate::wires_in_order() const {
  std::vector<WireId> all = controls;
  all.insert(all.end(), targets.begin(), targets.end());
  return all;
}

std::vector<WireId> Gate::support() const {
  std::vector<WireId> all = wires_in_order();
  std::sort(all.begin(), all.end());
  return all;
}

WireId Gate::max_wire() const {
  WireId m = 0;
  for (WireId w : wires_in_order()) m = std::max(m, w);
  return m;
}

bool Gate::operator==(const Gate& other) const {
  if (kind != other.kind || controls != other.controls ||
      targets != other.targets)
    return false;
  if (kind != GateKind::Merged) return true;
  return payload->approx_equal(*other.payload, 0.0);
}

std::string Gate::to_string() const {
  std::string s = kind_name(kind) + "(";
  bool first = true;
  for (WireId c : controls) {
    if (!first) s += ",";
    s += std::to_string(c);
    first = false;
  }
  if (!controls.empty()) s += ";";
  first = true;
  for (WireId t : targets) {
    if (!first) s += ",";
    s += std::to_string(t);
    first = false;
  }
  return s + ")";
}

}  // namespace qcost
