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

#include "qcost/passes.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "qcost/catalog.hpp"
#include "qcost/cost.hpp"
#include "qcost/simulate.hpp"

namespace qcost {

namespace {

/// Union of both supports when it fits on two wires, ascending.
std::optional<std::vector<WireId>> small_support_union(const Gate& a,
                                                       const Gate& b) {
  WireId buf[2];
  std::size_t n = 0;
  const auto put = [&](WireId w) {
    for (std::size_t k = 0; k < n; ++k)
      if (buf[k] == w) return true;
    if (n == 2) return false;
    buf[n++] = w;
    return true;
  };
  for (WireId w : a.controls)
    if (!put(w)) return std::nullopt;
  for (WireId w : a.targets)
    if (!put(w)) return std::nullopt;
  for (WireId w : b.controls)
    if (!put(w)) return std::nullopt;
  for (WireId w : b.targets)
    if (!put(w)) return std::nullopt;
  if (n == 2 && buf[0] > buf[1]) std::swap(buf[0], buf[1]);
  return std::vector<WireId>(buf, buf + n);
}

/// Plan for making gates at positions i < j adjacent: every gate in between
/// is moved before i (needs to commute with gate i) or after j (needs to
/// commute with everything it crosses). Processing is left to right, so a
/// right-moved gate crosses only the still-unprocessed gates and gate j.
struct AdjacencyPlan {
  std::vector<std::size_t> left;   // final order, before gate i
  std::vector<std::size_t> right;  // final order, after gate j
};

std::optional<AdjacencyPlan> plan_adjacency(const std::vector<Gate>& gates,
                                            std::size_t i, std::size_t j) {
  AdjacencyPlan plan;
  std::vector<std::size_t> exit_right;
  for (std::size_t k = i + 1; k < j; ++k) {
    if (commutes(gates[k], gates[i])) {
      plan.left.push_back(k);
      continue;
    }
    bool ok = commutes(gates[k], gates[j]);
    for (std::size_t m = k + 1; ok && m < j; ++m)
      ok = commutes(gates[k], gates[m]);
    if (!ok) return std::nullopt;
    exit_right.push_back(k);
  }
  plan.right.assign(exit_right.rbegin(), exit_right.rend());
  return plan;
}

/// prefix + left + replacement + right + suffix, with the pair (i, j) gone.
std::vector<Gate> splice_pair(const std::vector<Gate>& gates, std::size_t i,
                              std::size_t j, const AdjacencyPlan& plan,
                              const std::vector<Gate>& replacement) {
  std::vector<Gate> out;
  out.reserve(gates.size());
  out.insert(out.end(), gates.begin(), gates.begin() + i);
  for (std::size_t k : plan.left) out.push_back(gates[k]);
  out.insert(out.end(), replacement.begin(), replacement.end());
  for (std::size_t k : plan.right) out.push_back(gates[k]);
  out.insert(out.end(), gates.begin() + j + 1, gates.end());
  return out;
}

bool gate_is_identity(const Gate& g) {
  if (g.kind != GateKind::Merged) return false;
  return g.payload->is_identity_up_to_phase();
}

int pair_objective_linear(const std::vector<Gate>& gates) {
  int sum = 0;
  for (const Gate& g : gates) sum += catalog_cost(g.kind);
  return sum;
}

// ---------------------------------------------------------------------------
// Template matching
// ---------------------------------------------------------------------------

constexpr WireId kUnbound = static_cast<WireId>(-1);

std::vector<Gate> reversed_inverted(const std::vector<Gate>& gates) {
  std::vector<Gate> out;
  for (auto it = gates.rbegin(); it != gates.rend(); ++it)
    for (Gate& inv : inverse(*it)) out.push_back(std::move(inv));
  return out;
}

std::vector<Gate> rotate_sequence(const std::vector<Gate>& gates,
                                  std::size_t r) {
  std::vector<Gate> out;
  out.reserve(gates.size());
  for (std::size_t s = 0; s < gates.size(); ++s)
    out.push_back(gates[(r + s) % gates.size()]);
  return out;
}

/// Wire orderings under which a formal gate may be unified with an actual
/// gate of the same kind (controls of a Toffoli and targets of a swap or a
/// controlled swap are interchangeable).
std::vector<std::vector<WireId>> formal_wire_orderings(const Gate& g) {
  std::vector<std::vector<WireId>> orders;
  orders.push_back(g.wires_in_order());
  if (g.kind == GateKind::Toffoli)
    orders.push_back({g.controls[1], g.controls[0], g.targets[0]});
  if (g.kind == GateKind::Swap)
    orders.push_back({g.targets[1], g.targets[0]});
  if (g.kind == GateKind::Fredkin)
    orders.push_back({g.controls[0], g.targets[1], g.targets[0]});
  return orders;
}

/// Extends `map` so the formal gate instantiates to the actual gate; may
/// succeed in more than one way for symmetric kinds.
std::vector<std::vector<WireId>> unify_gate(const Gate& formal,
                                            const Gate& actual,
                                            const std::vector<WireId>& map) {
  std::vector<std::vector<WireId>> results;
  if (formal.kind != actual.kind) return results;
  if (formal.kind == GateKind::Merged) {
    if (formal.targets.size() != actual.targets.size()) return results;
    if (!formal.payload->approx_equal(*actual.payload)) return results;
  }
  const auto actual_wires = actual.wires_in_order();
  for (const auto& formal_wires : formal_wire_orderings(formal)) {
    std::vector<WireId> extended = map;
    bool ok = true;
    for (std::size_t k = 0; ok && k < formal_wires.size(); ++k) {
      const WireId f = formal_wires[k];
      const WireId a = actual_wires[k];
      if (extended[f] == a) continue;
      if (extended[f] != kUnbound) {
        ok = false;
        break;
      }
      for (WireId bound : extended)
        if (bound == a) {
          ok = false;
          break;
        }
      if (ok) extended[f] = a;
    }
    if (ok && std::find(results.begin(), results.end(), extended) == results.end())
      results.push_back(std::move(extended));
  }
  return results;
}

struct MatchState {
  std::vector<std::size_t> positions;  // matched circuit positions, ascending
  std::vector<std::size_t> blocked;    // skipped positions inside the span
  std::vector<WireId> map;             // formal -> actual
};

/// Depth-first search for the longest run of template gates, where each
/// candidate gate may bubble left past the skipped gates (all of which it
/// must commute with). `blocked` never exceeds the move window.
void extend_match(const std::vector<Gate>& gates,
                  const std::vector<Gate>& seq, std::size_t step,
                  std::size_t from, const MatchState& state, int move_window,
                  MatchState& best) {
  if (state.positions.size() > best.positions.size()) best = state;
  if (step == seq.size()) return;
  std::vector<std::size_t> crossing;
  for (std::size_t q = from; q < gates.size(); ++q) {
    if (state.blocked.size() + crossing.size() >
        static_cast<std::size_t>(move_window))
      break;
    const Gate& g = gates[q];
    bool movable = true;
    for (std::size_t u : state.blocked)
      if (!commutes(g, gates[u])) {
        movable = false;
        break;
      }
    for (std::size_t u : crossing)
      if (movable && !commutes(g, gates[u])) movable = false;
    if (movable) {
      for (auto& extended : unify_gate(seq[step], g, state.map)) {
        MatchState next;
        next.positions = state.positions;
        next.positions.push_back(q);
        next.blocked = state.blocked;
        next.blocked.insert(next.blocked.end(), crossing.begin(),
                            crossing.end());
        next.map = std::move(extended);
        extend_match(gates, seq, step + 1, q + 1, next, move_window, best);
      }
    }
    crossing.push_back(q);
  }
}

struct CandidateRewrite {
  std::vector<std::size_t> positions;
  std::vector<std::size_t> blocked;
  std::vector<Gate> replacement;
};

/// prefix + replacement + skipped gates + suffix. The matched gates bubble
/// left into one block at the anchor; the skipped gates end up after it.
std::vector<Gate> splice_match(const std::vector<Gate>& gates,
                               const CandidateRewrite& rw) {
  std::vector<Gate> out;
  out.reserve(gates.size());
  const std::size_t first = rw.positions.front();
  const std::size_t last = rw.positions.back();
  out.insert(out.end(), gates.begin(), gates.begin() + first);
  out.insert(out.end(), rw.replacement.begin(), rw.replacement.end());
  for (std::size_t u : rw.blocked) out.push_back(gates[u]);
  out.insert(out.end(), gates.begin() + last + 1, gates.end());
  return out;
}

/// Builds the replacement for matching the first `len` gates of `seq`:
/// inverses of the remaining gates in reverse order, instantiated through the
/// wire map. Fails if the remainder references an unbound formal wire.
std::optional<std::vector<Gate>> build_replacement(
    const std::vector<Gate>& seq, std::size_t len,
    const std::vector<WireId>& map) {
  std::vector<Gate> rest(seq.begin() + len, seq.end());
  std::vector<Gate> formal = reversed_inverted(rest);
  std::vector<Gate> out;
  out.reserve(formal.size());
  for (Gate g : formal) {
    for (WireId& w : g.controls) {
      if (map[w] == kUnbound) return std::nullopt;
      w = map[w];
    }
    for (WireId& w : g.targets) {
      if (map[w] == kUnbound) return std::nullopt;
      w = map[w];
    }
    out.push_back(std::move(g));
  }
  return out;
}

/// Walks every maximal template match (templates in store order, forward then
/// inverted, over every rotation, anchored at each position) and hands each
/// candidate — and optionally its shorter prefixes — to `visit`. A truthy
/// return stops the walk.
template <typename VisitFn>
void for_each_candidate(const std::vector<Gate>& gates,
                        const std::vector<Template>& store,
                        const PassOptions& opts, bool try_prefixes,
                        VisitFn visit) {
  for (std::size_t anchor = 0; anchor < gates.size(); ++anchor) {
    for (const Template& t : store) {
      for (int dir = 0; dir < 2; ++dir) {
        const std::vector<Gate> base =
            dir == 0 ? t.gates : reversed_inverted(t.gates);
        // matches much shorter than half the template would be replaced by a
        // much longer remainder; they are never worth costing
        const std::size_t growth_floor =
            std::max<std::size_t>(2, base.size() / 2 - (base.size() >= 4 ? 1 : 0));
        for (std::size_t r = 0; r < base.size(); ++r) {
          const std::vector<Gate> seq = rotate_sequence(base, r);
          MatchState init;
          init.map.assign(t.arity, kUnbound);
          MatchState best;
          // anchor the first template gate exactly at `anchor`
          for (auto& m0 : unify_gate(seq[0], gates[anchor], init.map)) {
            MatchState s;
            s.positions = {anchor};
            s.map = std::move(m0);
            extend_match(gates, seq, 1, anchor + 1, s, opts.move_window, best);
          }
          const std::size_t max_len = best.positions.size();
          const std::size_t min_len =
              try_prefixes ? growth_floor
                           : std::max<std::size_t>(max_len, growth_floor);
          for (std::size_t len = max_len; len >= min_len && len >= 2; --len) {
            MatchState prefix;
            prefix.positions.assign(best.positions.begin(),
                                    best.positions.begin() + len);
            prefix.blocked.clear();
            for (std::size_t u : best.blocked)
              if (u < prefix.positions.back()) prefix.blocked.push_back(u);
            prefix.map = best.map;
            auto replacement = build_replacement(seq, len, prefix.map);
            if (!replacement) continue;
            CandidateRewrite rw{prefix.positions, prefix.blocked,
                                std::move(*replacement)};
            std::vector<Gate> matched;
            for (std::size_t p : rw.positions) matched.push_back(gates[p]);
            if (matched == rw.replacement) continue;
            if (visit(matched, rw)) return;
          }
        }
      }
    }
  }
}

bool circuit_action_is_classical(const Circuit& c) {
  if (circuit_is_classical(c))
    return c.wires() <= kPermutationOracleMaxWires;
  if (c.wires() > kUnitaryOracleMaxWires) return false;
  return circuit_unitary(c).as_permutation().has_value();
}

}  // namespace

std::size_t PassTrace::total_rewrites() const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.rewrites;
  return n;
}

Circuit pass_move(const Circuit& circuit, std::size_t from, std::size_t to) {
  if (from >= circuit.size() || to >= circuit.size())
    throw std::out_of_range("gate position outside the circuit");
  std::vector<Gate> gates = circuit.gates();
  while (from < to) {
    if (!commutes(gates[from], gates[from + 1])) throw NotCommutable();
    std::swap(gates[from], gates[from + 1]);
    ++from;
  }
  while (from > to) {
    if (!commutes(gates[from - 1], gates[from])) throw NotCommutable();
    std::swap(gates[from - 1], gates[from]);
    --from;
  }
  return circuit.with_gates(std::move(gates));
}

Circuit pass_delete(const Circuit& circuit, const PassOptions& opts,
                    std::size_t* rewrites) {
  std::vector<Gate> gates = circuit.gates();
  std::size_t count = 0;
  const std::size_t window = static_cast<std::size_t>(opts.move_window);
  std::size_t i = 0;
  while (i < gates.size()) {
    bool removed_here = false;
    if (gate_is_identity(gates[i])) {
      gates.erase(gates.begin() + i);
      ++count;
      removed_here = true;
    } else {
      const auto si = gates[i].support();
      const std::size_t last = std::min(gates.size(), i + 2 + window);
      for (std::size_t j = i + 1; j < last; ++j) {
        if (gates[j].support() != si) continue;
        const UnitaryMatrix product =
            gate_unitary_on(gates[j], si).multiply(gate_unitary_on(gates[i], si));
        if (!product.is_identity_up_to_phase()) continue;
        const auto plan = plan_adjacency(gates, i, j);
        if (!plan) continue;
        gates = splice_pair(gates, i, j, *plan, {});
        ++count;
        removed_here = true;
        break;
      }
    }
    if (removed_here) {
      i = i > window + 1 ? i - window - 1 : 0;
    } else {
      ++i;
    }
  }
  if (rewrites) *rewrites = count;
  return circuit.with_gates(std::move(gates));
}

Circuit pass_template_match(const Circuit& circuit,
                            const std::vector<Template>& store,
                            const PassOptions& opts, std::size_t* rewrites) {
  std::vector<Gate> gates = circuit.gates();
  std::size_t count = 0;
  const bool count_first = opts.cost_objective == CostObjective::kGateCount;
  while (true) {
    std::optional<std::vector<Gate>> next;
    for_each_candidate(
        gates, store, opts, /*try_prefixes=*/true,
        [&](const std::vector<Gate>& matched, const CandidateRewrite& rw) {
          const int lin_old = pair_objective_linear(matched);
          const int lin_new = pair_objective_linear(rw.replacement);
          const auto old_key =
              count_first ? std::pair<int, int>(int(matched.size()), lin_old)
                          : std::pair<int, int>(lin_old, int(matched.size()));
          const auto new_key =
              count_first
                  ? std::pair<int, int>(int(rw.replacement.size()), lin_new)
                  : std::pair<int, int>(lin_new, int(rw.replacement.size()));
          if (new_key < old_key) {
            next = splice_match(gates, rw);
            return true;
          }
          return false;
        });
    if (!next) break;
    gates = std::move(*next);
    ++count;
  }
  if (rewrites) *rewrites = count;
  return circuit.with_gates(std::move(gates));
}

Circuit pass_decompose(const Circuit& circuit, std::size_t* rewrites) {
  std::vector<Gate> out;
  std::size_t count = 0;
  for (const Gate& g : circuit.gates()) {
    if (g.support().size() < 3) {
      out.push_back(g);
      continue;
    }
    for (Gate& p : decompose(g)) out.push_back(std::move(p));
    ++count;
  }
  if (rewrites) *rewrites = count;
  return circuit.with_gates(std::move(out));
}

Circuit pass_modified_template_match(const Circuit& circuit,
                                     const std::vector<Template>& store,
                                     const PassOptions& opts,
                                     std::size_t* rewrites) {
  std::vector<Gate> gates = circuit.gates();
  std::size_t count = 0;
  int current_cost = quantum_cost(circuit);
  // steepest descent: every maximal candidate is costed via a tentatively
  // merged copy and the largest strict improvement wins (ties go to the
  // earliest anchor, then store order)
  while (true) {
    std::optional<std::vector<Gate>> best_gates;
    int best_cost = current_cost;
    for_each_candidate(
        gates, store, opts, /*try_prefixes=*/false,
        [&](const std::vector<Gate>&, const CandidateRewrite& rw) {
          std::vector<Gate> spliced = splice_match(gates, rw);
          const int cost = quantum_cost(circuit.with_gates(spliced));
          if (cost < best_cost) {
            best_cost = cost;
            best_gates = std::move(spliced);
          }
          return false;
        });
    if (!best_gates) break;
    gates = std::move(*best_gates);
    current_cost = best_cost;
    ++count;
  }
  if (rewrites) *rewrites = count;
  return circuit.with_gates(std::move(gates));
}

Circuit pass_merge(const Circuit& circuit, const PassOptions& opts,
                   std::size_t* rewrites) {
  std::vector<Gate> gates = circuit.gates();
  std::size_t count = 0;
  const std::size_t window = static_cast<std::size_t>(opts.move_window);
  // after a merge, new opportunities can only appear within the move window
  // of the change, so the scan backs off locally instead of restarting
  std::size_t i = 0;
  while (i < gates.size()) {
    bool merged_here = false;
    const std::size_t last = std::min(gates.size(), i + 2 + window);
    for (std::size_t j = i + 1; j < last; ++j) {
      const auto joint = small_support_union(gates[i], gates[j]);
      if (!joint) continue;
      const auto plan = plan_adjacency(gates, i, j);
      if (!plan) continue;
      UnitaryMatrix payload = gate_unitary_on(gates[j], *joint)
                                  .multiply(gate_unitary_on(gates[i], *joint));
      Gate merged = Gate::merged(*joint, std::move(payload));
      gates = splice_pair(gates, i, j, *plan, {std::move(merged)});
      ++count;
      merged_here = true;
      break;
    }
    if (merged_here) {
      i = i > window + 1 ? i - window - 1 : 0;
    } else {
      ++i;
    }
  }
  if (rewrites) *rewrites = count;
  return circuit.with_gates(std::move(gates));
}

Circuit pass_garbage_elim(const Circuit& circuit, std::size_t* rewrites) {
  const auto primary = circuit.primary_wires();
  if (primary.empty()) throw NoPrimaryOutputs();

  std::vector<bool> live(circuit.wires(), false);
  for (WireId w : primary) live[w] = true;

  std::vector<Gate> kept;
  std::size_t removed = 0;
  const auto& gates = circuit.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    bool writes_live = false;
    for (WireId w : it->targets)
      if (live[w]) writes_live = true;
    if (!writes_live) {
      ++removed;
      continue;
    }
    for (WireId w : it->support()) live[w] = true;
    kept.push_back(*it);
  }
  std::reverse(kept.begin(), kept.end());
  if (rewrites) *rewrites = removed;
  return circuit.with_gates(std::move(kept));
}

namespace {

struct PipelineRunner {
  const PassOptions& opts;
  PassTrace& trace;
  Circuit current;

  void apply(const std::string& name, EquivalenceMode mode,
             const std::function<Circuit(const Circuit&, std::size_t*)>& fn) {
    std::size_t rewrites = 0;
    Circuit after = fn(current, &rewrites);
    PassRecord rec;
    rec.name = name;
    rec.gates_before = current.size();
    rec.gates_after = after.size();
    rec.cost_before = quantum_cost(current);
    rec.cost_after = quantum_cost(after);
    rec.rewrites = rewrites;
    if (opts.verify_each_pass && rewrites > 0) {
      try {
        if (!equivalent(current, after, mode)) throw VerificationError(name);
      } catch (const OracleTooLarge&) {
        // wider than the oracle allows; the pass is trusted unchecked
      }
    }
    trace.records.push_back(std::move(rec));
    current = std::move(after);
  }
};

}  // namespace

PipelineOutcome run_pipeline(const Circuit& circuit,
                             const std::vector<Template>& extra,
                             const PassOptions& opts) {
  std::vector<Template> nct_store = builtin_set(TemplateLibrary::NCT);
  std::vector<Template> ncv_store = builtin_set(TemplateLibrary::NCV);
  for (const Template& t : extra) {
    nct_store.push_back(t);
    bool small = true;
    for (const Gate& g : t.gates)
      if (g.support().size() > 2) small = false;
    if (small) ncv_store.push_back(t);
  }

  PassTrace trace;
  PipelineRunner run{opts, trace, circuit};

  if (!opts.skip_pre_optimization) {
    run.apply("pre_delete", EquivalenceMode::kFull,
              [&](const Circuit& c, std::size_t* n) {
                return pass_delete(c, opts, n);
              });
    run.apply("pre_template", EquivalenceMode::kFull,
              [&](const Circuit& c, std::size_t* n) {
                return pass_template_match(c, nct_store, opts, n);
              });
  }

  const bool garbage_applies =
      run.current.has_garbage() && !run.current.primary_wires().empty() &&
      circuit_action_is_classical(run.current);
  if (garbage_applies) {
    run.apply("garbage_pre", EquivalenceMode::kPrimaryOutputs,
              [&](const Circuit& c, std::size_t* n) {
                return pass_garbage_elim(c, n);
              });
  }

  const Circuit pre_optimized = run.current;

  run.apply("decompose", EquivalenceMode::kFull,
            [&](const Circuit& c, std::size_t* n) {
              return pass_decompose(c, n);
            });
  if (garbage_applies) {
    run.apply("garbage", EquivalenceMode::kPrimaryOutputs,
              [&](const Circuit& c, std::size_t* n) {
                return pass_garbage_elim(c, n);
              });
  }

  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    const std::size_t seen = trace.total_rewrites();
    run.apply("delete", EquivalenceMode::kFull,
              [&](const Circuit& c, std::size_t* n) {
                return pass_delete(c, opts, n);
              });
    run.apply("modified_template", EquivalenceMode::kFull,
              [&](const Circuit& c, std::size_t* n) {
                return pass_modified_template_match(c, ncv_store, opts, n);
              });
    run.apply("merge", EquivalenceMode::kFull,
              [&](const Circuit& c, std::size_t* n) {
                return pass_merge(c, opts, n);
              });
    run.apply("cleanup_delete", EquivalenceMode::kFull,
              [&](const Circuit& c, std::size_t* n) {
                return pass_delete(c, opts, n);
              });
    run.apply("cleanup_template", EquivalenceMode::kFull,
              [&](const Circuit& c, std::size_t* n) {
                return pass_template_match(c, ncv_store, opts, n);
              });
    if (trace.total_rewrites() == seen) break;
  }

  if (garbage_applies) {
    run.apply("garbage_final", EquivalenceMode::kPrimaryOutputs,
              [&](const Circuit& c, std::size_t* n) {
                return pass_garbage_elim(c, n);
              });
  }

  return PipelineOutcome{std::move(run.current), std::move(trace),
                         pre_optimized};
}

std::pair<Circuit, PassTrace> pipeline(const Circuit& circuit,
                                       const std::vector<Template>& extra,
                                       const PassOptions& opts) {
  PipelineOutcome outcome = run_pipeline(circuit, extra, opts);
  return {std::move(outcome.circuit), std::move(outcome.trace)};
}

}  // namespace qcost
