// Copyright 2026 The Authors.
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

// Rainbow common independent sets by alternating-trail augmentation.
//
// The solver keeps a rainbow set R independent in both matroids. While
// |R| < n it sweeps unused family sets one at a time, growing the set of
// R-elements that are the last removal of some valid trail ("reachable"),
// each with a witness trail. Every sweep round either finds a new reachable
// element or an augmenting trail. Once all of R is reachable, one more
// unused set always yields an augmenting trail. With m >= 2n - 1 sets there
// are always enough unused sets, so the sweep reaches size n.
//
// If the sweep ever stalls, the solver falls back to an exhaustive trail
// search and then to brute force, and records the event.

#ifndef RAINBOW_SOLVER_HPP_
#define RAINBOW_SOLVER_HPP_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "rainbow/element_set.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/instance.hpp"
#include "rainbow/lab/brute_force.hpp"
#include "rainbow/operations.hpp"
#include "rainbow/trail.hpp"

namespace rainbow {

/// R-elements reachable as the final removal of a valid trail, with one
/// witness trail each, plus the unused family sets not yet swept.
struct SweepState {
  ElementSet reachable;
  std::map<Element, Trail> witness;
  std::deque<SetIndex> fresh_sets;

  /// Empty reachable set; every family index unused by r is fresh, ascending.
  static SweepState start(const RainbowAssignment& r) {
    SweepState s;
    for (SetIndex i = 0; i < r.family_size(); ++i)
      if (!r.uses(i)) s.fresh_sets.push_back(i);
    return s;
  }
};

struct NewReachable {
  Element element;
  Trail trail;
};
struct Augment {
  Trail trail;
};
struct Stalled {
  std::string reason;
};
using SweepOutcome = std::variant<NewReachable, Augment, Stalled>;

/// One fast-path failure and how it was recovered.
struct FallbackEvent {
  std::size_t rainbow_size = 0;
  std::string reason;
  std::string resolved_by;  // "exhaustive_cat_search", "brute_force" or "none"
};

struct SolverStats {
  std::uint64_t m_calls = 0;
  std::uint64_t n_calls = 0;
  std::size_t augmentations = 0;
  std::size_t fast_path_augmentations = 0;
  std::size_t sweep_rounds = 0;
  std::vector<FallbackEvent> fallbacks;

  bool fallback_used() const { return !fallbacks.empty(); }
};

enum class SolveStatus { solved, infeasible };

struct SolveOptions {
  // Start from the greedy seed; when false, every element of the result is
  // placed by an augmentation.
  bool greedy_seed = true;
};

struct SolveResult {
  SolveStatus status = SolveStatus::solved;
  RainbowAssignment assignment;
  SolverStats stats;
};

class RainbowSolver {
 public:
  explicit RainbowSolver(const RainbowInstance& inst)
      : inst_(inst), mo_(inst.m_oracle, stats_.m_calls), no_(inst.n_oracle, stats_.n_calls) {
    validate_instance(inst);
  }
  RainbowSolver(const RainbowSolver&) = delete;
  RainbowSolver& operator=(const RainbowSolver&) = delete;

  const SolverStats& stats() const { return stats_; }

  /// Scans sets in index order and elements in id order, taking the first
  /// unused element that keeps the range independent in both matroids.
  /// Stops once the range has n elements.
  RainbowAssignment greedy_seed() {
    RainbowAssignment r(inst_.family.size());
    ElementSet range;
    for (SetIndex i = 0; i < inst_.family.size() && range.size() < inst_.n; ++i) {
      for (Element e : inst_.family[i]) {
        if (range.contains(e)) continue;
        ElementSet trial = range.with(e);
        if (mo_.is_independent(trial) && no_.is_independent(trial)) {
          r.assign(i, e);
          range = std::move(trial);
          break;
        }
      }
    }
    return r;
  }

  bool validate(const RainbowAssignment& r, const Trail& t) {
    try {
      check_trail_structure(inst_, r, t);
    } catch (const TrailStructureError&) {
      return false;
    }
    return trail_properties_hold(mo_, no_, r.range(), t);
  }

  /// Processes state.fresh_sets.front(). Does not modify the state; see
  /// record() for folding a NewReachable outcome in.
  SweepOutcome sweep_round(const RainbowAssignment& assignment, const SweepState& state) {
    if (assignment.size() >= inst_.n) throw PreconditionError("sweep_round: rainbow set already has size n");
    if (state.fresh_sets.empty()) throw PreconditionError("sweep_round: no fresh set left");
    ++stats_.sweep_rounds;

    const SetIndex k = state.fresh_sets.front();
    const ElementSet& r = assignment.range();
    const ElementSet& reach = state.reachable;
    const ElementSet unreached = r - reach;

    // a outside span_M(R \ reachable) and outside span_N(reachable). Both
    // sets are independent, so span membership is a single oracle call.
    std::optional<Element> candidate;
    for (Element a : inst_.family[k] - r) {
      if (mo_.is_independent(unreached.with(a)) && no_.is_independent(reach.with(a))) {
        candidate = a;
        break;
      }
    }
    if (!candidate) return Stalled{"no candidate in family[" + std::to_string(k) + "]"};
    const Element a = *candidate;
    const bool m_free = mo_.is_independent(r.with(a));
    const bool n_free = no_.is_independent(r.with(a));

    if (m_free) {
      if (n_free) return checked_augment(assignment, single_step(k, a));
      const ElementSet fresh_n = fundamental_circuit(no_, r, a) - reach;
      if (fresh_n.empty()) return Stalled{"N-circuit of candidate lies inside reachable"};
      const Element removed = *fresh_n.begin();
      Trail t;
      t.steps.push_back({k, a, removed});
      return checked_reachable(assignment, removed, std::move(t));
    }

    // a is M-spanned by R but not by R \ reachable: its M-circuit meets reachable.
    const ElementSet circuit_m = fundamental_circuit(mo_, r, a);
    const ElementSet hits = circuit_m & reach;
    if (hits.empty()) return Stalled{"M-circuit of candidate misses reachable"};
    auto rewound = rewind(state, *hits.begin(), circuit_m);
    if (!rewound) return Stalled{"witness trail has no removal in the M-circuit"};
    Trail prefix = std::move(*rewound);
    const Element r_prime = *prefix.steps.back().removed;

    // R' = R + a_1 - r_1 + ... + a_j, i.e. the prefix without its last removal.
    const ElementSet r_dash = trail_result(r, prefix).with(r_prime);
    if (r_dash.contains(a) || !same_m_circuit(r_dash, a, circuit_m))
      return Stalled{"M-circuit changed along the witness prefix"};

    if (n_free) {
      Trail t = prefix;
      t.steps.push_back({k, a, std::nullopt});
      t.augmenting = true;
      return checked_augment(assignment, std::move(t));
    }

    const ElementSet fresh_n = fundamental_circuit(no_, r, a) - reach;
    if (fresh_n.empty()) return Stalled{"N-circuit of candidate lies inside reachable"};
    const Element removed = *fresh_n.begin();

    // First witness step whose added element has `removed` in its N-circuit.
    for (std::size_t i = 0; i < prefix.steps.size(); ++i) {
      const Element added = prefix.steps[i].added;
      if (no_.is_independent(r.with(added))) continue;
      if (fundamental_circuit(no_, r, added).contains(removed)) {
        Trail t = prefix.prefix(i);
        t.steps.push_back({prefix.steps[i].source, added, removed});
        return checked_reachable(assignment, removed, std::move(t));
      }
    }
    Trail t = prefix;
    t.steps.push_back({k, a, removed});
    return checked_reachable(assignment, removed, std::move(t));
  }

  /// Folds a NewReachable outcome into the state and retires the swept set.
  static void record(SweepState& state, const NewReachable& found) {
    state.reachable.insert(found.element);
    state.witness[found.element] = found.trail;
    state.fresh_sets.pop_front();
  }

  /// Final step once every element of R is reachable: any unused set
  /// contains an element that extends R in N, and the witness of one of its
  /// M-circuit elements turns that into an augmenting trail.
  SweepOutcome close_round(const RainbowAssignment& assignment, const SweepState& state, SetIndex final_index) {
    const ElementSet& r = assignment.range();
    if (state.reachable != r) throw PreconditionError("close_round: reachable set must equal R");
    if (assignment.size() >= inst_.n) throw PreconditionError("close_round: rainbow set already has size n");
    if (final_index >= inst_.family.size() || assignment.uses(final_index))
      throw PreconditionError("close_round: final set is not fresh");
    for (const auto& [_, t] : state.witness)
      for (const auto& s : t.steps)
        if (s.source == final_index) throw PreconditionError("close_round: final set already used by a witness");

    std::optional<Element> pick;
    for (Element a : inst_.family[final_index] - r) {
      if (no_.is_independent(r.with(a))) {
        pick = a;
        break;
      }
    }
    if (!pick) return Stalled{"no element of the final set extends R in N"};
    const Element a = *pick;
    if (mo_.is_independent(r.with(a))) return checked_augment(assignment, single_step(final_index, a));

    const ElementSet circuit_m = fundamental_circuit(mo_, r, a);
    auto rewound = rewind(state, *circuit_m.begin(), circuit_m);
    if (!rewound) return Stalled{"witness trail has no removal in the M-circuit"};
    Trail t = std::move(*rewound);
    t.steps.push_back({final_index, a, std::nullopt});
    t.augmenting = true;
    return checked_augment(assignment, std::move(t));
  }

  /// Sweep-guided search for one augmenting trail from the given R.
  SweepOutcome fast_augment(const RainbowAssignment& assignment) {
    SweepState state = SweepState::start(assignment);
    while (state.reachable != assignment.range()) {
      if (state.fresh_sets.empty()) return Stalled{"ran out of fresh sets while sweeping"};
      SweepOutcome out = sweep_round(assignment, state);
      if (const auto* found = std::get_if<NewReachable>(&out)) {
        record(state, *found);
        continue;
      }
      return out;
    }
    if (state.fresh_sets.empty()) return Stalled{"no fresh set left for the closing step"};
    return close_round(assignment, state, state.fresh_sets.front());
  }

  /// Breadth-first search over every valid trail of length <= |R| + 1,
  /// returning a shortest augmenting one.
  std::optional<Trail> exhaustive_cat_search(const RainbowAssignment& assignment) {
    const ElementSet& r = assignment.range();
    struct Node {
      Trail trail;
      ElementSet current;
      ElementSet used;  // source indices, stored as element ids
    };
    std::deque<Node> queue;
    // (current set, used sources) determines every future extension.
    std::set<std::pair<ElementSet, ElementSet>> seen;
    queue.push_back({Trail{}, r, ElementSet{}});
    seen.emplace(r, ElementSet{});
    while (!queue.empty()) {
      Node node = std::move(queue.front());
      queue.pop_front();
      for (SetIndex s = 0; s < inst_.family.size(); ++s) {
        const Element s_key{static_cast<std::uint32_t>(s)};
        if (assignment.uses(s) || node.used.contains(s_key)) continue;
        for (Element a : inst_.family[s] - r - node.current) {
          ElementSet grown = node.current.with(a);
          if (!mo_.is_independent(grown)) continue;
          if (no_.is_independent(grown)) {
            Trail t = node.trail;
            t.steps.push_back({s, a, std::nullopt});
            t.augmenting = true;
            if (validate(assignment, t)) return t;
            continue;
          }
          for (Element out : node.current & r) {
            ElementSet next = grown.without(out);
            if (!no_.is_independent(next) || !same_span(no_, next, r)) continue;
            ElementSet used = node.used.with(s_key);
            if (!seen.emplace(next, used).second) continue;
            Trail t = node.trail;
            t.steps.push_back({s, a, out});
            queue.push_back({std::move(t), std::move(next), std::move(used)});
          }
        }
      }
    }
    return std::nullopt;
  }

  SolveResult solve(SolveOptions opts = {}) {
    RainbowAssignment r = opts.greedy_seed ? greedy_seed() : RainbowAssignment(inst_.family.size());
    while (r.size() < inst_.n) {
      SweepOutcome out = fast_augment(r);
      if (const auto* aug = std::get_if<Augment>(&out)) {
        r = apply_trail(inst_, r, aug->trail);
        ++stats_.augmentations;
        ++stats_.fast_path_augmentations;
        continue;
      }
      FallbackEvent event{r.size(), std::get<Stalled>(out).reason, "none"};
      if (auto t = exhaustive_cat_search(r)) {
        r = apply_trail(inst_, r, *t);
        event.resolved_by = "exhaustive_cat_search";
        stats_.fallbacks.push_back(std::move(event));
        ++stats_.augmentations;
        continue;
      }
      lab::BruteForceStats bf;
      auto larger = lab::brute_force_rainbow(inst_, r.size() + 1, &bf);
      stats_.m_calls += bf.m_calls;
      stats_.n_calls += bf.n_calls;
      if (larger) {
        r = std::move(*larger);
        event.resolved_by = "brute_force";
        stats_.fallbacks.push_back(std::move(event));
        ++stats_.augmentations;
        continue;
      }
      stats_.fallbacks.push_back(event);
      if (inst_.meets_bound())
        throw GuaranteeViolation("no rainbow set of size " + std::to_string(r.size() + 1) + " found although m = " +
                               std::to_string(inst_.family.size()) + " >= 2n - 1 = " + std::to_string(2 * inst_.n - 1));
      return {SolveStatus::infeasible, std::move(r), stats_};
    }
    if (auto why = rainbow_violation(inst_, r); !why.empty()) throw GuaranteeViolation("solve: " + why);
    return {SolveStatus::solved, std::move(r), stats_};
  }

 private:
  static Trail single_step(SetIndex k, Element a) {
    Trail t;
    t.steps.push_back({k, a, std::nullopt});
    t.augmenting = true;
    return t;
  }

  // Witness of `start`, cut right after its earliest removal lying in `circuit`.
  static std::optional<Trail> rewind(const SweepState& state, Element start, const ElementSet& circuit) {
    const auto it = state.witness.find(start);
    if (it == state.witness.end()) return std::nullopt;
    const Trail& w = it->second;
    for (std::size_t j = 0; j < w.steps.size(); ++j)
      if (w.steps[j].removed && circuit.contains(*w.steps[j].removed)) return w.prefix(j + 1);
    return std::nullopt;
  }

  bool same_m_circuit(const ElementSet& base, Element a, const ElementSet& expected) {
    if (!mo_.is_independent(base) || mo_.is_independent(base.with(a))) return false;
    return fundamental_circuit(mo_, base, a) == expected;
  }

  SweepOutcome checked_augment(const RainbowAssignment& r, Trail t) {
    if (!validate(r, t)) return Stalled{"constructed augmenting trail failed validation"};
    return Augment{std::move(t)};
  }

  SweepOutcome checked_reachable(const RainbowAssignment& r, Element removed, Trail t) {
    if (!validate(r, t)) return Stalled{"constructed witness trail failed validation"};
    return NewReachable{removed, std::move(t)};
  }

  const RainbowInstance& inst_;
  SolverStats stats_;
  CountingOracle<MatroidOracle> mo_;
  CountingOracle<MatroidOracle> no_;
};

inline RainbowAssignment greedy_seed(const RainbowInstance& inst) { return RainbowSolver(inst).greedy_seed(); }

inline SweepOutcome sweep_round(const RainbowInstance& inst, const RainbowAssignment& r, const SweepState& state) {
  return RainbowSolver(inst).sweep_round(r, state);
}

inline SweepOutcome close_round(const RainbowInstance& inst, const RainbowAssignment& r, const SweepState& state,
                                SetIndex final_index) {
  return RainbowSolver(inst).close_round(r, state, final_index);
}

inline std::optional<Trail> exhaustive_cat_search(const RainbowInstance& inst, const RainbowAssignment& r) {
  return RainbowSolver(inst).exhaustive_cat_search(r);
}

/// Returns a rainbow set of size n in M and N, or an infeasible result
/// holding a maximum rainbow set when the family is below the 2n - 1 bound.
inline SolveResult solve(const RainbowInstance& inst, SolveOptions opts = {}) { return RainbowSolver(inst).solve(opts); }

}  // namespace rainbow

#endif  // RAINBOW_SOLVER_HPP_
