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

#include "qcost/io.hpp"

#include <cstdio>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace qcost {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

std::string strip(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                           line.back() == '\t'))
    line.pop_back();
  std::size_t first = line.find_first_not_of(" \t");
  return first == std::string::npos ? std::string{} : line.substr(first);
}

Complex parse_complex(const std::string& tok, int line) {
  const auto comma = tok.find(',');
  if (comma == std::string::npos)
    throw ParseError(line, "expected complex entry 're,im', got '" + tok + "'");
  try {
    return {std::stod(tok.substr(0, comma)), std::stod(tok.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ParseError(line, "bad complex entry '" + tok + "'");
  }
}

std::string format_complex(Complex value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g,%.17g", value.real(), value.imag());
  return buf;
}

void require_wires(const std::vector<std::string>& tokens, std::size_t wires,
                   int line) {
  if (tokens.size() != wires + 1)
    throw ParseError(line, "'" + tokens[0] + "' expects " +
                               std::to_string(wires) + " wire(s)");
}

void require_distinct_wires(const std::vector<WireId>& wires, int line) {
  for (std::size_t i = 0; i < wires.size(); ++i)
    for (std::size_t j = i + 1; j < wires.size(); ++j)
      if (wires[i] == wires[j])
        throw DuplicateWireInGate(line, "gate lists a wire twice");
}

}  // namespace

Gate parse_gate_tokens(const std::vector<std::string>& tokens, int line,
                       const std::function<WireId(const std::string&)>& resolve) {
  const std::string& op = tokens[0];

  const auto wires_for = [&](std::size_t count) {
    require_wires(tokens, count, line);
    std::vector<WireId> wires;
    for (std::size_t i = 1; i <= count; ++i) wires.push_back(resolve(tokens[i]));
    require_distinct_wires(wires, line);
    return wires;
  };

  if (op.size() >= 2 && (op[0] == 't' || op[0] == 'f') &&
      std::isdigit(static_cast<unsigned char>(op[1]))) {
    const int k = std::atoi(op.c_str() + 1);
    if (op[0] == 't') {
      if (k == 1) return Gate::x(wires_for(1)[0]);
      if (k == 2) {
        auto w = wires_for(2);
        return Gate::cnot(w[0], w[1]);
      }
      if (k == 3) {
        auto w = wires_for(3);
        return Gate::toffoli(w[0], w[1], w[2]);
      }
      throw UnsupportedGate(line, "gates with " + std::to_string(k - 1) +
                                      " controls are not supported");
    }
    if (k == 3) {
      auto w = wires_for(3);
      return Gate::fredkin(w[0], w[1], w[2]);
    }
    throw UnsupportedGate(line, "multi-control swaps are not supported");
  }
  if (op == "p3") {
    auto w = wires_for(3);
    return Gate::peres(w[0], w[1], w[2]);
  }
  if (op == "swap") {
    auto w = wires_for(2);
    return Gate::swap_wires(w[0], w[1]);
  }
  if (op == "v") {
    auto w = wires_for(2);
    return Gate::cv(w[0], w[1]);
  }
  if (op == "v+") {
    auto w = wires_for(2);
    return Gate::cv_dag(w[0], w[1]);
  }
  if (op == "v1") return Gate::v(wires_for(1)[0]);
  if (op == "v1+") return Gate::v_dag(wires_for(1)[0]);
  if (op == "h") return Gate::h(wires_for(1)[0]);

  if (op == "u1" || op == "u2") {
    const std::size_t nw = op == "u1" ? 1 : 2;
    const std::size_t entries = nw == 1 ? 4 : 16;
    if (tokens.size() != 1 + nw + entries)
      throw ParseError(line, "'" + op + "' expects " + std::to_string(nw) +
                                 " wire(s) and " + std::to_string(entries) +
                                 " matrix entries");
    std::vector<WireId> wires;
    for (std::size_t i = 1; i <= nw; ++i) wires.push_back(resolve(tokens[i]));
    require_distinct_wires(wires, line);
    UnitaryMatrix m(std::size_t{1} << nw);
    for (std::size_t i = 0; i < entries; ++i) {
      m.at(i / m.dim(), i % m.dim()) = parse_complex(tokens[1 + nw + i], line);
    }
    if (nw == 2 && wires[0] > wires[1])
      throw ParseError(line, "u2 wires must be ascending");
    try {
      return Gate::merged(wires, std::move(m));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, e.what());
    }
  }

  throw ParseError(line, "unknown gate token '" + op + "'");
}

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;

  int numvars = -1;
  std::vector<std::string> names;
  std::unordered_map<std::string, WireId> index;
  std::string constants, garbage;
  std::vector<Gate> gates;
  bool in_body = false, body_done = false;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    auto tokens = split_tokens(line);
    const std::string& head = tokens[0];

    if (head[0] == '.') {
      if (in_body && head != ".end")
        throw ParseError(line_no, "directive inside the gate list");
      if (head == ".version" || head == ".inputs" || head == ".outputs") {
        continue;
      } else if (head == ".numvars") {
        if (tokens.size() != 2)
          throw ParseError(line_no, ".numvars expects one number");
        numvars = std::atoi(tokens[1].c_str());
        if (numvars <= 0) throw ParseError(line_no, "bad wire count");
      } else if (head == ".variables") {
        if (numvars < 0) throw ParseError(line_no, ".numvars must come first");
        names.assign(tokens.begin() + 1, tokens.end());
        if (static_cast<int>(names.size()) != numvars)
          throw ParseError(line_no, "expected " + std::to_string(numvars) +
                                        " variable names");
        for (WireId w = 0; w < names.size(); ++w) {
          if (!index.emplace(names[w], w).second)
            throw ParseError(line_no, "duplicate variable '" + names[w] + "'");
        }
      } else if (head == ".constants") {
        if (tokens.size() != 2 ||
            static_cast<int>(tokens[1].size()) != numvars)
          throw ParseError(line_no, ".constants needs one entry per wire");
        constants = tokens[1];
        for (char c : constants)
          if (c != '0' && c != '1' && c != '-')
            throw ParseError(line_no, "constants entries are '0', '1' or '-'");
      } else if (head == ".garbage") {
        if (tokens.size() != 2 ||
            static_cast<int>(tokens[1].size()) != numvars)
          throw ParseError(line_no, ".garbage needs one entry per wire");
        garbage = tokens[1];
        for (char c : garbage)
          if (c != '1' && c != '-')
            throw ParseError(line_no, "garbage entries are '1' or '-'");
      } else if (head == ".begin") {
        if (names.empty())
          throw ParseError(line_no, ".begin before variable declarations");
        in_body = true;
      } else if (head == ".end") {
        if (!in_body) throw ParseError(line_no, ".end without .begin");
        in_body = false;
        body_done = true;
      } else {
        throw ParseError(line_no, "unknown directive '" + head + "'");
      }
      continue;
    }

    if (!in_body)
      throw ParseError(line_no, "gate line outside .begin/.end");
    const int gate_line = line_no;
    gates.push_back(parse_gate_tokens(tokens, gate_line, [&](const std::string& name) {
      auto it = index.find(name);
      if (it == index.end())
        throw UndeclaredVariable(gate_line, "undeclared variable '" + name + "'");
      return it->second;
    }));
  }

  if (numvars < 0) throw ParseError(line_no, "missing .numvars");
  if (names.empty()) throw ParseError(line_no, "missing .variables");
  if (in_body || !body_done)
    throw ParseError(line_no, "missing " + std::string(in_body ? ".end" : ".begin"));

  std::vector<WireRole> roles;
  for (WireId w = 0; w < names.size(); ++w) {
    WireRole role{names[w], std::nullopt, false};
    if (!constants.empty() && constants[w] != '-')
      role.constant = constants[w] == '1';
    if (!garbage.empty()) role.garbage = garbage[w] == '1';
    roles.push_back(std::move(role));
  }
  Circuit circuit(static_cast<WireId>(names.size()), std::move(roles));
  for (auto& g : gates) circuit.add(std::move(g));
  return circuit;
}

std::string write_circuit(const Circuit& circuit, bool allow_merged) {
  std::ostringstream out;
  out << ".version 2.0\n.numvars " << circuit.wires() << "\n.variables";
  for (const auto& role : circuit.roles()) out << ' ' << role.name;
  out << '\n';
  if (circuit.constant_count() > 0) {
    out << ".constants ";
    for (const auto& role : circuit.roles())
      out << (role.constant ? (*role.constant ? '1' : '0') : '-');
    out << '\n';
  }
  if (circuit.has_garbage()) {
    out << ".garbage ";
    for (const auto& role : circuit.roles()) out << (role.garbage ? '1' : '-');
    out << '\n';
  }
  out << ".begin\n";

  const auto name = [&](WireId w) { return circuit.roles()[w].name; };
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::X: out << "t1 " << name(g.targets[0]); break;
      case GateKind::Cnot:
        out << "t2 " << name(g.controls[0]) << ' ' << name(g.targets[0]);
        break;
      case GateKind::Toffoli:
        out << "t3 " << name(g.controls[0]) << ' ' << name(g.controls[1]) << ' '
            << name(g.targets[0]);
        break;
      case GateKind::Fredkin:
        out << "f3 " << name(g.controls[0]) << ' ' << name(g.targets[0]) << ' '
            << name(g.targets[1]);
        break;
      case GateKind::Peres:
        out << "p3 " << name(g.controls[0]) << ' ' << name(g.targets[0]) << ' '
            << name(g.targets[1]);
        break;
      case GateKind::Swap:
        out << "swap " << name(g.targets[0]) << ' ' << name(g.targets[1]);
        break;
      case GateKind::CV:
        out << "v " << name(g.controls[0]) << ' ' << name(g.targets[0]);
        break;
      case GateKind::CVdag:
        out << "v+ " << name(g.controls[0]) << ' ' << name(g.targets[0]);
        break;
      case GateKind::V: out << "v1 " << name(g.targets[0]); break;
      case GateKind::Vdag: out << "v1+ " << name(g.targets[0]); break;
      case GateKind::H: out << "h " << name(g.targets[0]); break;
      case GateKind::Merged: {
        if (!allow_merged) throw UnserializableGate();
        out << (g.targets.size() == 1 ? "u1" : "u2");
        for (WireId w : g.targets) out << ' ' << name(w);
        const auto& m = *g.payload;
        for (std::size_t r = 0; r < m.dim(); ++r)
          for (std::size_t c = 0; c < m.dim(); ++c)
            out << ' ' << format_complex(m.at(r, c));
        break;
      }
    }
    out << '\n';
  }
  out << ".end\n";
  return out.str();
}

std::string write_report(const CostReport& report, const PassTrace& trace) {
  nlohmann::ordered_json j;
  j["gate_count"] = report.gate_count;
  j["linear_cost"] = report.linear_cost;
  j["quantum_cost"] = report.quantum_cost;
  j["garbage_bits"] = report.garbage_bits;
  j["constant_inputs"] = report.constant_inputs;
  j["total_cost"] = report.total_cost;
  j["passes"] = nlohmann::ordered_json::array();
  for (const auto& rec : trace.records) {
    nlohmann::ordered_json p;
    p["name"] = rec.name;
    p["gates_before"] = rec.gates_before;
    p["gates_after"] = rec.gates_after;
    p["cost_before"] = rec.cost_before;
    p["cost_after"] = rec.cost_after;
    j["passes"].push_back(std::move(p));
  }
  return j.dump(2) + "\n";
}

}  // namespace qcost
