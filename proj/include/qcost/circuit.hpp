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

#include <optional>
#include <string>
#include <vector>

#include "qcost/gate.hpp"
#include "qcost/types.hpp"

namespace qcost {

/// Per-wire bookkeeping: input name, optional fixed input bit, and whether the
/// output is garbage (unused downstream). A wire may be both constant-input
/// and garbage-output.
struct WireRole {
  std::string name;
  std::optional<bool> constant;
  bool garbage = false;

  bool operator==(const WireRole& other) const = default;
};

/// Ordered gate list over n wires, leftmost gate applied first.
class Circuit {
 public:
  explicit Circuit(WireId wires);
  Circuit(WireId wires, std::vector<WireRole> roles);

  WireId wires() const noexcept { return wires_; }
  const std::vector<WireRole>& roles() const noexcept { return roles_; }
  std::vector<WireRole>& roles() noexcept { return roles_; }

  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::vector<Gate>& gates() noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  /// Appends after checking the gate fits on this circuit's wires.
  void add(Gate gate);

  bool has_garbage() const;
  std::size_t garbage_count() const;
  std::size_t constant_count() const;
  std::vector<WireId> primary_wires() const;

  /// Same constant/garbage flags per wire; names are ignored.
  bool roles_compatible(const Circuit& other) const;

  Circuit with_gates(std::vector<Gate> gates) const;

 private:
  WireId wires_;
  std::vector<WireRole> roles_;
  std::vector<Gate> gates_;
};

}  // namespace qcost
