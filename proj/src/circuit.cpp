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

#include "qcost/circuit.hpp"

#include <stdexcept>

namespace qcost {

Circuit::Circuit(WireId wires) : wires_(wires) {
  roles_.reserve(wires);
  for (WireId w = 0; w < wires; ++w)
    roles_.push_back(WireRole{"w" + std::to_string(w), std::nullopt, false});
}

Circuit::Circuit(WireId wires, std::vector<WireRole> roles)
    : wires_(wires), roles_(std::move(roles)) {
  if (roles_.size() != wires_)
    throw std::invalid_argument("one role per wire required");
}

void Circuit::add(Gate gate) {
  if (!gate.wires_in_order().empty() && gate.max_wire() >= wires_)
    throw WireOutOfRange();
  gates_.push_back(std::move(gate));
}

bool Circuit::has_garbage() const {
  for (const auto& r : roles_)
    if (r.garbage) return true;
  return false;
}

std::size_t Circuit::garbage_count() const {
  std::size_t n = 0;
  for (const auto& r : roles_) n += r.garbage ? 1 : 0;
  return n;
}

std::size_t Circuit::constant_count() const {
  std::size_t n = 0;
  for (const auto& r : roles_) n += r.constant.has_value() ? 1 : 0;
  return n;
}

std::vector<WireId> Circuit::primary_wires() const {
  std::vector<WireId> out;
  for (WireId w = 0; w < wires_; ++w)
    if (!roles_[w].garbage) out.push_back(w);
  return out;
}

bool Circuit::roles_compatible(const Circuit& other) const {
  if (wires_ != other.wires_) return false;
  for (WireId w = 0; w < wires_; ++w) {
    if (roles_[w].constant != other.roles_[w].constant) return false;
    if (roles_[w].garbage != other.roles_[w].garbage) return false;
  }
  return true;
}

Circuit Circuit::with_gates(std::vector<Gate> gates) const {
  Circuit out(wires_, roles_);
  for (auto& g : gates) out.add(std::move(g));
  return out;
}

}  // namespace qcost
