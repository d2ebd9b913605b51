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

#include "qcost/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

namespace qcost {

namespace {

constexpr Complex kI{0.0, 1.0};

UnitaryMatrix matrix_1q(Complex a, Complex b, Complex c, Complex d) {
  UnitaryMatrix m(2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

UnitaryMatrix x_matrix() { return matrix_1q(0, 1, 1, 0); }

UnitaryMatrix v_matrix() {
  return matrix_1q(0.5 * (1.0 + kI), 0.5 * (1.0 - kI), 0.5 * (1.0 - kI),
                   0.5 * (1.0 + kI));
}

UnitaryMatrix v_dag_matrix() {
  return matrix_1q(0.5 * (1.0 - kI), 0.5 * (1.0 + kI), 0.5 * (1.0 + kI),
                   0.5 * (1.0 - kI));
}

UnitaryMatrix h_matrix() {
  const double s = 1.0 / std::sqrt(2.0);
  return matrix_1q(s, s, s, -s);
}

/// Single-control block embedding: identity on control 0, u on control 1.
UnitaryMatrix controlled(const UnitaryMatrix& u) {
  UnitaryMatrix m(2 * u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) m.at(i, i) = 1.0;
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < u.dim(); ++j)
      m.at(u.dim() + i, u.dim() + j) = u.at(i, j);
  return m;
}

UnitaryMatrix permutation_matrix_from_images(
    const std::vector<std::uint32_t>& images) {
  UnitaryMatrix m(images.size());
  for (std::size_t x = 0; x < images.size(); ++x) m.at(images[x], x) = 1.0;
  return m;
}

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t gate_hash(const Gate& g) {
  std::uint64_t h = static_cast<std::uint64_t>(g.kind) + 1;
  for (WireId w : g.controls) h = mix(h, w + 1);
  h = mix(h, 0xabcdULL);
  for (WireId w : g.targets) h = mix(h, w + 1);
  if (g.payload) h = mix(h, g.payload_hash);
  return h;
}

bool supports_overlap(const Gate& a, const Gate& b) {
  for (WireId w : a.controls) {
    for (WireId v : b.controls)
      if (w == v) return true;
    for (WireId v : b.targets)
      if (w == v) return true;
  }
  for (WireId w : a.targets) {
    for (WireId v : b.controls)
      if (w == v) return true;
    for (WireId v : b.targets)
      if (w == v) return true;
  }
  return false;
}

}  // namespace

std::vector<WireId> support(const Gate& gate) { return gate.support(); }

UnitaryMatrix gate_unitary(const Gate& gate) {
  static const UnitaryMatrix x = x_matrix();
  static const UnitaryMatrix v = v_matrix();
  static const UnitaryMatrix vd = v_dag_matrix();
  static const UnitaryMatrix h = h_matrix();
  static const UnitaryMatrix cx = controlled(x_matrix());
  static const UnitaryMatrix cv = controlled(v_matrix());
  static const UnitaryMatrix cvd = controlled(v_dag_matrix());
  static const UnitaryMatrix ccx = controlled(controlled(x_matrix()));
  static const UnitaryMatrix swap = permutation_matrix_from_images({0, 2, 1, 3});
  static const UnitaryMatrix fredkin =
      permutation_matrix_from_images({0, 1, 2, 3, 4, 6, 5, 7});
  // (a,b,c) -> (a, a^b, c^(a&b)) over local order a,b,c
  static const UnitaryMatrix peres =
      permutation_matrix_from_images({0, 1, 2, 3, 6, 7, 5, 4});
  switch (gate.kind) {
    case GateKind::X: return x;
    case GateKind::V: return v;
    case GateKind::Vdag: return vd;
    case GateKind::H: return h;
    case GateKind::Cnot: return cx;
    case GateKind::CV: return cv;
    case GateKind::CVdag: return cvd;
    case GateKind::Toffoli: return ccx;
    case GateKind::Swap: return swap;
    case GateKind::Fredkin: return fredkin;
    case GateKind::Peres: return peres;
    case GateKind::Merged: return *gate.payload;
  }
  throw UnknownKind();
}

UnitaryMatrix gate_unitary_on(const Gate& gate, std::span<const WireId> wires) {
  const auto own = gate.wires_in_order();
  const std::size_t k = own.size();
  const std::size_t m = wires.size();
  // local bit position (from MSB) of each of the gate's own wires
  std::vector<std::size_t> pos(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto it = std::find(wires.begin(), wires.end(), own[i]);
    if (it == wires.end()) throw WireOutOfRange();
    pos[i] = static_cast<std::size_t>(it - wires.begin());
  }
  const UnitaryMatrix local = gate_unitary(gate);
  const std::size_t dim = std::size_t{1} << m;
  UnitaryMatrix out(dim);
  for (std::size_t row = 0; row < dim; ++row) {
    for (std::size_t col = 0; col < dim; ++col) {
      // wires outside the gate must carry identical bits
      bool diagonal_rest = true;
      for (std::size_t b = 0; b < m; ++b) {
        if (std::find(pos.begin(), pos.end(), b) != pos.end()) continue;
        const std::size_t shift = m - 1 - b;
        if (((row >> shift) & 1) != ((col >> shift) & 1)) {
          diagonal_rest = false;
          break;
        }
      }
      if (!diagonal_rest) continue;
      std::size_t lr = 0, lc = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t shift = m - 1 - pos[i];
        lr = (lr << 1) | ((row >> shift) & 1);
        lc = (lc << 1) | ((col >> shift) & 1);
      }
      out.at(row, col) = local.at(lr, lc);
    }
  }
  return out;
}

void apply_gate(std::span<Complex> amplitudes, WireId wires, const Gate& gate) {
  const auto own = gate.wires_in_order();
  const std::size_t k = own.size();
  const std::size_t block = std::size_t{1} << k;
  const UnitaryMatrix local = gate_unitary(gate);

  std::vector<std::size_t> own_shift(k);
  for (std::size_t i = 0; i < k; ++i) own_shift[i] = wires - 1 - own[i];

  std::vector<std::size_t> rest_shift;
  for (WireId w = 0; w < wires; ++w) {
    if (std::find(own.begin(), own.end(), w) == own.end())
      rest_shift.push_back(wires - 1 - w);
  }

  // offsets of the 2^k local basis states relative to a rest-wires base
  std::vector<std::size_t> offset(block, 0);
  for (std::size_t l = 0; l < block; ++l)
    for (std::size_t i = 0; i < k; ++i)
      if ((l >> (k - 1 - i)) & 1) offset[l] |= std::size_t{1} << own_shift[i];

  std::vector<Complex> buf(block);
  const std::size_t rest = std::size_t{1} << rest_shift.size();
  for (std::size_t r = 0; r < rest; ++r) {
    std::size_t base = 0;
    for (std::size_t i = 0; i < rest_shift.size(); ++i)
      if ((r >> i) & 1) base |= std::size_t{1} << rest_shift[i];
    for (std::size_t l = 0; l < block; ++l) {
      Complex acc{};
      for (std::size_t l2 = 0; l2 < block; ++l2) {
        const Complex coeff = local.at(l, l2);
        if (coeff != Complex{}) acc += coeff * amplitudes[base | offset[l2]];
      }
      buf[l] = acc;
    }
    for (std::size_t l = 0; l < block; ++l) amplitudes[base | offset[l]] = buf[l];
  }
}

UnitaryMatrix circuit_unitary(const Circuit& circuit) {
  const WireId n = circuit.wires();
  if (n > kUnitaryOracleMaxWires)
    throw OracleTooLarge(n, kUnitaryOracleMaxWires);
  const std::size_t dim = std::size_t{1} << n;
  // rows of `images` hold the evolving image of each basis state
  std::vector<std::vector<Complex>> images(dim, std::vector<Complex>(dim));
  for (std::size_t j = 0; j < dim; ++j) images[j][j] = 1.0;
  for (const Gate& g : circuit.gates())
    for (std::size_t j = 0; j < dim; ++j) apply_gate(images[j], n, g);
  UnitaryMatrix u(dim);
  for (std::size_t col = 0; col < dim; ++col)
    for (std::size_t row = 0; row < dim; ++row) u.at(row, col) = images[col][row];
  return u;
}

bool is_classical_kind(GateKind kind) {
  switch (kind) {
    case GateKind::X:
    case GateKind::Cnot:
    case GateKind::Toffoli:
    case GateKind::Swap:
    case GateKind::Fredkin:
    case GateKind::Peres:
      return true;
    default:
      return false;
  }
}

bool gate_is_classical(const Gate& gate) {
  if (is_classical_kind(gate.kind)) return true;
  if (gate.kind == GateKind::Merged)
    return gate.payload->as_permutation().has_value();
  return false;
}

bool circuit_is_classical(const Circuit& circuit) {
  for (const Gate& g : circuit.gates())
    if (!gate_is_classical(g)) return false;
  return true;
}

std::uint32_t classical_image(const Gate& gate, WireId wires, std::uint32_t x) {
  const auto bit = [wires](std::uint32_t v, WireId w) -> std::uint32_t {
    return (v >> (wires - 1 - w)) & 1u;
  };
  const auto flip = [wires](std::uint32_t& v, WireId w) {
    v ^= (1u << (wires - 1 - w));
  };
  switch (gate.kind) {
    case GateKind::X:
      flip(x, gate.targets[0]);
      return x;
    case GateKind::Cnot:
      if (bit(x, gate.controls[0])) flip(x, gate.targets[0]);
      return x;
    case GateKind::Toffoli:
      if (bit(x, gate.controls[0]) && bit(x, gate.controls[1]))
        flip(x, gate.targets[0]);
      return x;
    case GateKind::Swap: {
      const auto a = bit(x, gate.targets[0]);
      const auto b = bit(x, gate.targets[1]);
      if (a != b) {
        flip(x, gate.targets[0]);
        flip(x, gate.targets[1]);
      }
      return x;
    }
    case GateKind::Fredkin: {
      if (!bit(x, gate.controls[0])) return x;
      const auto a = bit(x, gate.targets[0]);
      const auto b = bit(x, gate.targets[1]);
      if (a != b) {
        flip(x, gate.targets[0]);
        flip(x, gate.targets[1]);
      }
      return x;
    }
    case GateKind::Peres: {
      const auto a = bit(x, gate.controls[0]);
      const auto b = bit(x, gate.targets[0]);
      if (a && b) flip(x, gate.targets[1]);
      if (a) flip(x, gate.targets[0]);
      return x;
    }
    case GateKind::Merged: {
      const auto perm = gate.payload->as_permutation();
      if (!perm) throw NotClassical();
      std::size_t local = 0;
      for (WireId w : gate.targets) local = (local << 1) | bit(x, w);
      const std::size_t image = (*perm)[local];
      for (std::size_t i = 0; i < gate.targets.size(); ++i) {
        const WireId w = gate.targets[i];
        const std::uint32_t want =
            (image >> (gate.targets.size() - 1 - i)) & 1u;
        if (bit(x, w) != want) flip(x, w);
      }
      return x;
    }
    default:
      throw NotClassical();
  }
}

Permutation circuit_permutation(const Circuit& circuit) {
  const WireId n = circuit.wires();
  if (n > kPermutationOracleMaxWires)
    throw OracleTooLarge(n, kPermutationOracleMaxWires);
  if (!circuit_is_classical(circuit)) throw NotClassical();
  const std::uint32_t dim = 1u << n;
  Permutation perm;
  perm.images.resize(dim);
  for (std::uint32_t x = 0; x < dim; ++x) {
    std::uint32_t y = x;
    for (const Gate& g : circuit.gates()) y = classical_image(g, n, y);
    perm.images[x] = y;
  }
  return perm;
}

bool commutes(const Gate& a, const Gate& b) {
  if (!supports_overlap(a, b)) return true;

  thread_local std::unordered_map<std::uint64_t, bool> cache;
  const std::uint64_t key = mix(gate_hash(a) * 31, gate_hash(b));
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const auto sa = a.support();
  const auto sb = b.support();
  std::vector<WireId> joint;
  std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(),
                 std::back_inserter(joint));
  const UnitaryMatrix ua = gate_unitary_on(a, joint);
  const UnitaryMatrix ub = gate_unitary_on(b, joint);
  const bool result = ua.multiply(ub).approx_equal(ub.multiply(ua));
  if (cache.size() > 4'000'000) cache.clear();
  cache.emplace(key, result);
  return result;
}

std::vector<Gate> inverse(const Gate& gate) {
  switch (gate.kind) {
    case GateKind::X:
    case GateKind::Cnot:
    case GateKind::Toffoli:
    case GateKind::Swap:
    case GateKind::Fredkin:
    case GateKind::H:
      return {gate};
    case GateKind::V: return {Gate::v_dag(gate.targets[0])};
    case GateKind::Vdag: return {Gate::v(gate.targets[0])};
    case GateKind::CV: return {Gate::cv_dag(gate.controls[0], gate.targets[0])};
    case GateKind::CVdag: return {Gate::cv(gate.controls[0], gate.targets[0])};
    case GateKind::Merged:
      return {Gate::merged(gate.targets, gate.payload->adjoint())};
    case GateKind::Peres: {
      // reversed and inverted form of the 4-gate decomposition
      const WireId a = gate.controls[0];
      const WireId b = gate.targets[0];
      const WireId c = gate.targets[1];
      return {Gate::cv_dag(a, c), Gate::cv(b, c), Gate::cnot(a, b),
              Gate::cv_dag(b, c)};
    }
  }
  throw UnknownKind();
}

namespace {

bool vectors_equal_up_to_phase(const std::vector<Complex>& u,
                               const std::vector<Complex>& v, double tol) {
  if (u.size() != v.size()) return false;
  std::size_t pivot = 0;
  double best = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (std::abs(u[i]) > best) {
      best = std::abs(u[i]);
      pivot = i;
    }
  }
  if (best <= tol) {
    for (const auto& x : v)
      if (std::abs(x) > tol) return false;
    return true;
  }
  const Complex phase = v[pivot] / u[pivot];
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (std::abs(phase * u[i] - v[i]) > tol) return false;
  return true;
}

/// Splits a state over primary/garbage wires into a product, or fails.
/// Returned primary factor has unit norm.
std::optional<std::vector<Complex>> primary_factor(
    const std::vector<Complex>& state, WireId n,
    const std::vector<WireId>& primary, const std::vector<WireId>& garbage) {
  const std::size_t pd = std::size_t{1} << primary.size();
  const std::size_t gd = std::size_t{1} << garbage.size();
  std::vector<Complex> a(pd * gd);
  for (std::size_t idx = 0; idx < state.size(); ++idx) {
    std::size_t p = 0, g = 0;
    for (WireId w : primary) p = (p << 1) | ((idx >> (n - 1 - w)) & 1);
    for (WireId w : garbage) g = (g << 1) | ((idx >> (n - 1 - w)) & 1);
    a[p * gd + g] = state[idx];
  }
  std::size_t pstar = 0, gstar = 0;
  double best = 0.0;
  for (std::size_t p = 0; p < pd; ++p) {
    for (std::size_t g = 0; g < gd; ++g) {
      if (std::abs(a[p * gd + g]) > best) {
        best = std::abs(a[p * gd + g]);
        pstar = p;
        gstar = g;
      }
    }
  }
  if (best <= kTolerance) return std::nullopt;
  // rank-1 test: a[p][g] * a[p*][g*] == a[p][g*] * a[p*][g]
  const Complex anchor = a[pstar * gd + gstar];
  for (std::size_t p = 0; p < pd; ++p) {
    for (std::size_t g = 0; g < gd; ++g) {
      const Complex lhs = a[p * gd + g] * anchor;
      const Complex rhs = a[p * gd + gstar] * a[pstar * gd + g];
      if (std::abs(lhs - rhs) > kTolerance) return std::nullopt;
    }
  }
  std::vector<Complex> factor(pd);
  double norm = 0.0;
  for (std::size_t p = 0; p < pd; ++p) {
    factor[p] = a[p * gd + gstar];
    norm += std::norm(factor[p]);
  }
  norm = std::sqrt(norm);
  for (auto& x : factor) x /= norm;
  return factor;
}

std::vector<std::uint32_t> valid_basis_inputs(const Circuit& c) {
  const WireId n = c.wires();
  std::vector<std::uint32_t> inputs;
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    bool ok = true;
    for (WireId w = 0; w < n; ++w) {
      const auto& fixed = c.roles()[w].constant;
      if (fixed && ((x >> (n - 1 - w)) & 1u) != (*fixed ? 1u : 0u)) {
        ok = false;
        break;
      }
    }
    if (ok) inputs.push_back(x);
  }
  return inputs;
}

}  // namespace

bool equivalent(const Circuit& a, const Circuit& b, EquivalenceMode mode) {
  const WireId n = a.wires();
  if (n != b.wires()) throw RoleMismatch("circuits have different widths");

  if (mode == EquivalenceMode::kFull) {
    if (circuit_is_classical(a) && circuit_is_classical(b)) {
      if (n > kPermutationOracleMaxWires)
        throw OracleTooLarge(n, kPermutationOracleMaxWires);
      return circuit_permutation(a) == circuit_permutation(b);
    }
    if (n > kUnitaryOracleMaxWires)
      throw OracleTooLarge(n, kUnitaryOracleMaxWires);
    return circuit_unitary(a).equal_up_to_global_phase(circuit_unitary(b));
  }

  if (!a.roles_compatible(b))
    throw RoleMismatch("wire roles differ between the circuits");

  const auto primary = a.primary_wires();
  std::vector<WireId> garbage;
  for (WireId w = 0; w < n; ++w)
    if (a.roles()[w].garbage) garbage.push_back(w);

  if (circuit_is_classical(a) && circuit_is_classical(b)) {
    if (n > kPermutationOracleMaxWires)
      throw OracleTooLarge(n, kPermutationOracleMaxWires);
    const Permutation pa = circuit_permutation(a);
    const Permutation pb = circuit_permutation(b);
    std::uint32_t primary_mask = 0;
    for (WireId w : primary) primary_mask |= 1u << (n - 1 - w);
    for (std::uint32_t x : valid_basis_inputs(a)) {
      if ((pa.apply(x) & primary_mask) != (pb.apply(x) & primary_mask))
        return false;
    }
    return true;
  }

  if (n > kUnitaryOracleMaxWires)
    throw OracleTooLarge(n, kUnitaryOracleMaxWires);

  const std::size_t dim = std::size_t{1} << n;
  for (std::uint32_t x : valid_basis_inputs(a)) {
    std::vector<Complex> sa(dim), sb(dim);
    sa[x] = 1.0;
    sb[x] = 1.0;
    for (const Gate& g : a.gates()) apply_gate(sa, n, g);
    for (const Gate& g : b.gates()) apply_gate(sb, n, g);
    const auto fa = primary_factor(sa, n, primary, garbage);
    const auto fb = primary_factor(sb, n, primary, garbage);
    if (!fa || !fb)
      throw RoleMismatch(
          "garbage wires do not separate from the primary outputs");
    if (!vectors_equal_up_to_phase(*fa, *fb, kTolerance)) return false;
  }
  return true;
}

}  // namespace qcost
