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
#include <string>
#include <string_view>
#include <vector>

#include "qcost/circuit.hpp"
#include "qcost/gate.hpp"

namespace qcost {

enum class TemplateLibrary { NCT, NCV, MIXED };

std::string library_name(TemplateLibrary library);

/// A gate sequence over formal wires 0..arity-1 whose product is the identity
/// (up to global phase). Matching a consecutive run of it licenses replacing
/// the run by the inverses of the unmatched gates in reverse order.
struct Template {
  std::string id;
  WireId arity;
  std::vector<Gate> gates;
  TemplateLibrary library;
};

enum class MatchDirection { kForward, kInverse };

/// One applicable rewrite found in a host circuit.
struct TemplateMatch {
  std::string template_id;
  std::vector<WireId> wire_map;          // formal -> actual
  std::vector<std::size_t> positions;    // matched gate positions, ascending
  MatchDirection direction;
  std::vector<Gate> replacement;         // already instantiated
};

/// True iff the template's gates multiply to the identity up to global phase.
bool validate(const Template& t);

/// Formal wires replaced through `map` (formal i -> map[i]); map must be
/// injective into [0, n).
std::vector<Gate> instantiate(const Template& t, std::span<const WireId> map,
                              WireId n);

/// The shipped, validated template set for one library (NCT or NCV).
const std::vector<Template>& builtin_set(TemplateLibrary library);

/// Parses the line-based template file format:
///   template <id> <arity>
///   <one gate per line, circuit-format tokens over formal wire names>
///   end
/// Comments start with '#'. Every template is validated; identity violations
/// raise InvalidTemplate.
std::vector<Template> load_templates(std::string_view text);

}  // namespace qcost
