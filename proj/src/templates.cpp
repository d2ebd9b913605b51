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

#include "qcost/templates.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "qcost/io.hpp"
#include "qcost/simulate.hpp"

namespace qcost {

std::string library_name(TemplateLibrary library) {
  switch (library) {
    case TemplateLibrary::NCT: return "NCT";
    case TemplateLibrary::NCV: return "NCV";
    case TemplateLibrary::MIXED: return "MIXED";
  }
  throw UnknownLibrary("?");
}

bool validate(const Template& t) {
  if (t.arity == 0 || t.gates.empty()) return false;
  for (const Gate& g : t.gates)
    if (g.max_wire() >= t.arity) return false;
  Circuit c(t.arity);
  for (const Gate& g : t.gates) c.add(g);
  return circuit_unitary(c).is_identity_up_to_phase();
}

std::vector<Gate> instantiate(const Template& t, std::span<const WireId> map,
                              WireId n) {
  if (map.size() != t.arity)
    throw std::invalid_argument("wire map must cover every formal wire");
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] >= n) throw WireOutOfRange();
    for (std::size_t j = i + 1; j < map.size(); ++j)
      if (map[i] == map[j]) throw NonInjectiveMap();
  }
  std::vector<Gate> out;
  out.reserve(t.gates.size());
  for (const Gate& g : t.gates) {
    Gate mapped = g;
    for (WireId& w : mapped.controls) w = map[w];
    for (WireId& w : mapped.targets) w = map[w];
    out.push_back(std::move(mapped));
  }
  return out;
}

namespace {

Template make(std::string id, WireId arity, std::vector<Gate> gates,
              TemplateLibrary library) {
  Template t{std::move(id), arity, std::move(gates), library};
  if (!validate(t)) throw InvalidTemplate(t.id);
  return t;
}

std::vector<Template> build_nct_set() {
  using G = Gate;
  std::vector<Template> set;
  set.push_back(make("nct-dup-x", 1, {G::x(0), G::x(0)}, TemplateLibrary::NCT));
  set.push_back(make("nct-dup-cnot", 2, {G::cnot(0, 1), G::cnot(0, 1)},
                     TemplateLibrary::NCT));
  set.push_back(make("nct-dup-toffoli", 3,
                     {G::toffoli(0, 1, 2), G::toffoli(0, 1, 2)},
                     TemplateLibrary::NCT));
  set.push_back(make("nct-cnot4-ctrl", 3,
                     {G::cnot(0, 1), G::cnot(0, 2), G::cnot(0, 1), G::cnot(0, 2)},
                     TemplateLibrary::NCT));
  set.push_back(make("nct-cnot4-tgt", 3,
                     {G::cnot(0, 2), G::cnot(1, 2), G::cnot(0, 2), G::cnot(1, 2)},
                     TemplateLibrary::NCT));
  set.push_back(make("nct-cnot4-disjoint", 4,
                     {G::cnot(0, 1), G::cnot(2, 3), G::cnot(0, 1), G::cnot(2, 3)},
                     TemplateLibrary::NCT));
  set.push_back(make("nct-cnot4-xtgt", 2,
                     {G::cnot(0, 1), G::x(1), G::cnot(0, 1), G::x(1)},
                     TemplateLibrary::NCT));
  set.push_back(make("nct-peres5-a", 3,
                     {G::toffoli(0, 1, 2), G::cnot(0, 1), G::toffoli(0, 1, 2),
                      G::cnot(0, 1), G::cnot(0, 2)},
                     TemplateLibrary::NCT));
  set.push_back(make("nct-peres5-b", 3,
                     {G::toffoli(0, 1, 2), G::cnot(1, 0), G::toffoli(0, 1, 2),
                      G::cnot(1, 0), G::cnot(1, 2)},
                     TemplateLibrary::NCT));
  set.push_back(make("nct-tof5-negctrl", 3,
                     {G::x(0), G::toffoli(0, 1, 2), G::x(0), G::toffoli(0, 1, 2),
                      G::cnot(1, 2)},
                     TemplateLibrary::NCT));
  // three Toffolis realizing a controlled swap, against its
  // CNOT-Toffoli-CNOT form
  set.push_back(make("nct-fredkin6", 3,
                     {G::toffoli(0, 2, 1), G::toffoli(0, 1, 2),
                      G::toffoli(0, 2, 1), G::cnot(2, 1), G::toffoli(0, 1, 2),
                      G::cnot(2, 1)},
                     TemplateLibrary::NCT));
  set.push_back(make("nct-swap6", 2,
                     {G::cnot(0, 1), G::cnot(1, 0), G::cnot(0, 1), G::cnot(1, 0),
                      G::cnot(0, 1), G::cnot(1, 0)},
                     TemplateLibrary::NCT));
  return set;
}

std::vector<Template> build_ncv_set() {
  using G = Gate;
  std::vector<Template> set;
  set.push_back(make("ncv-vpair", 1, {G::v(0), G::v_dag(0)},
                     TemplateLibrary::NCV));
  set.push_back(make("ncv-cvpair", 2, {G::cv(0, 1), G::cv_dag(0, 1)},
                     TemplateLibrary::NCV));
  set.push_back(make("ncv-vvx", 1, {G::v(0), G::v(0), G::x(0)},
                     TemplateLibrary::NCV));
  set.push_back(make("ncv-vdvdx", 1, {G::v_dag(0), G::v_dag(0), G::x(0)},
                     TemplateLibrary::NCV));
  set.push_back(make("ncv-cvcvcnot", 2,
                     {G::cv(0, 1), G::cv(0, 1), G::cnot(0, 1)},
                     TemplateLibrary::NCV));
  set.push_back(make("ncv-cvdcvdcnot", 2,
                     {G::cv_dag(0, 1), G::cv_dag(0, 1), G::cnot(0, 1)},
                     TemplateLibrary::NCV));
  // Pairs of five-gate realizations of the doubly-controlled NOT back to
  // back: the canonical V-last form followed by a different form, inverted.
  // Matching either half rewrites it into the other, which changes no gate
  // count by itself and only pays off through merging.
  set.push_back(make("ncv-tof10-a", 3,
                     {G::cv(1, 2), G::cnot(0, 1), G::cv_dag(1, 2), G::cnot(0, 1),
                      G::cv(0, 2), G::cnot(1, 0), G::cv(0, 2), G::cnot(1, 0),
                      G::cv_dag(1, 2), G::cv_dag(0, 2)},
                     TemplateLibrary::NCV));
  set.push_back(make("ncv-tof10-b", 3,
                     {G::cv(1, 2), G::cnot(0, 1), G::cv_dag(1, 2), G::cnot(0, 1),
                      G::cv(0, 2), G::cv_dag(1, 2), G::cnot(0, 1), G::cv(1, 2),
                      G::cnot(0, 1), G::cv_dag(0, 2)},
                     TemplateLibrary::NCV));
  set.push_back(make("ncv-tof10-c", 3,
                     {G::cv(1, 2), G::cnot(0, 1), G::cv_dag(1, 2), G::cnot(0, 1),
                      G::cv(0, 2), G::cnot(0, 1), G::cv(1, 2), G::cnot(0, 1),
                      G::cv_dag(1, 2), G::cv_dag(0, 2)},
                     TemplateLibrary::NCV));
  return set;
}

}  // namespace

const std::vector<Template>& builtin_set(TemplateLibrary library) {
  static const std::vector<Template> nct = build_nct_set();
  static const std::vector<Template> ncv = build_ncv_set();
  switch (library) {
    case TemplateLibrary::NCT: return nct;
    case TemplateLibrary::NCV: return ncv;
    default: throw UnknownLibrary(library_name(library));
  }
}

std::vector<Template> load_templates(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;

  std::vector<Template> out;
  bool open = false;
  std::string id;
  WireId arity = 0;
  std::vector<Gate> gates;
  std::unordered_map<std::string, WireId> formal;
  int header_line = 0;

  const auto close = [&]() {
    if (formal.size() != arity)
      throw ParseError(header_line,
                       "template '" + id + "' declares " + std::to_string(arity) +
                           " wires but uses " + std::to_string(formal.size()));
    Template t{id, arity, gates, TemplateLibrary::MIXED};
    if (!validate(t)) throw InvalidTemplate(id);
    out.push_back(std::move(t));
    open = false;
    gates.clear();
    formal.clear();
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;

    if (tokens[0] == "template") {
      if (open) throw ParseError(line_no, "previous template not closed");
      if (tokens.size() != 3)
        throw ParseError(line_no, "expected 'template <id> <arity>'");
      id = tokens[1];
      const int a = std::atoi(tokens[2].c_str());
      if (a <= 0) throw ParseError(line_no, "bad template arity");
      arity = static_cast<WireId>(a);
      header_line = line_no;
      open = true;
      continue;
    }
    if (tokens[0] == "end") {
      if (!open) throw ParseError(line_no, "'end' without 'template'");
      close();
      continue;
    }
    if (!open) throw ParseError(line_no, "gate line outside a template");
    const int gate_line = line_no;
    gates.push_back(parse_gate_tokens(tokens, gate_line, [&](const std::string& name) {
      auto it = formal.find(name);
      if (it != formal.end()) return it->second;
      if (formal.size() >= arity)
        throw ParseError(gate_line, "more distinct wires than the declared arity");
      const WireId w = static_cast<WireId>(formal.size());
      formal.emplace(name, w);
      return w;
    }));
  }
  if (open) throw ParseError(line_no, "unterminated template '" + id + "'");
  return out;
}

}  // namespace qcost
