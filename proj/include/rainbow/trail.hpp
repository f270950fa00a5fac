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

// Colorful alternating trails relative to a rainbow set R.
//
// A trail adds a_1 (from family set s_1), removes r_1 in R, adds a_2, removes
// r_2, ... Writing R_i = R + a_1 - r_1 + ... + a_i - r_i, a trail is valid when
//   (M)  R_{i-1} + a_i is independent in M, for every step, and
//   (N)  R_i is independent in N with span_N(R_i) = span_N(R), for every step
//        that removes something.
// An augmenting trail omits the last removal and ends with R_{k-1} + a_k
// independent in N as well, which is a rainbow set one larger than R.

#ifndef RAINBOW_TRAIL_HPP_
#define RAINBOW_TRAIL_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rainbow/element_set.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/instance.hpp"
#include "rainbow/operations.hpp"

namespace rainbow {

struct TrailStep {
  SetIndex source = 0;
  Element added;
  std::optional<Element> removed;  // absent only on the last step of an augmenting trail

  bool operator==(const TrailStep&) const = default;
};

struct Trail {
  std::vector<TrailStep> steps;
  bool augmenting = false;

  std::size_t length() const { return steps.size(); }
  bool operator==(const Trail&) const = default;

  /// Steps [0, count) as a non-augmenting trail.
  Trail prefix(std::size_t count) const {
    Trail t;
    t.steps.assign(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(count));
    return t;
  }
};

inline std::ostream& operator<<(std::ostream& os, const Trail& t) {
  os << '[';
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    if (i) os << ", ";
    os << "(A" << s.source << ", +" << s.added.id;
    if (s.removed) os << ", -" << s.removed->id;
    os << ')';
  }
  return os << ']' << (t.augmenting ? " augmenting" : "");
}

/// span(a) == span(b), via rank(a) == rank(b) == rank(a | b).
template <IndependenceOracle O>
bool same_span(const O& m, const ElementSet& a, const ElementSet& b) {
  const std::size_t ra = rank(m, a);
  return ra == rank(m, b) && ra == rank(m, a | b);
}

/// The set obtained from R after applying every step of the trail.
inline ElementSet trail_result(const ElementSet& r, const Trail& t) {
  ElementSet cur = r;
  for (const auto& s : t.steps) {
    cur.insert(s.added);
    if (s.removed) cur.erase(*s.removed);
  }
  return cur;
}

/// Throws TrailStructureError if the trail is not a well-formed candidate.
inline void check_trail_structure(const RainbowInstance& inst, const RainbowAssignment& r, const Trail& t) {
  const ElementSet& range = r.range();
  std::vector<bool> source_seen(inst.family.size(), false);
  ElementSet added;
  ElementSet removed;
  auto fail = [](std::size_t i, const std::string& what) {
    throw TrailStructureError("trail step " + std::to_string(i) + ": " + what);
  };
  if (t.augmenting && t.steps.empty()) throw TrailStructureError("an augmenting trail needs at least one step");
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const TrailStep& s = t.steps[i];
    const bool last = i + 1 == t.steps.size();
    if (s.source >= inst.family.size()) fail(i, "source index out of range");
    if (r.uses(s.source)) fail(i, "source set already used by the assignment");
    if (source_seen[s.source]) fail(i, "source set reused");
    source_seen[s.source] = true;
    if (!inst.family[s.source].contains(s.added)) fail(i, "added element not in its source set");
    if (range.contains(s.added)) fail(i, "added element already in R");
    if (added.contains(s.added)) fail(i, "added element repeated");
    added.insert(s.added);
    if (last && t.augmenting) {
      if (s.removed) fail(i, "last step of an augmenting trail must not remove");
      continue;
    }
    if (!s.removed) fail(i, "missing removed element");
    if (!range.contains(*s.removed)) fail(i, "removed element not in R");
    if (removed.contains(*s.removed)) fail(i, "removed element repeated");
    removed.insert(*s.removed);
  }
}

/// Checks the exchange properties with the given (possibly counting) oracles.
/// Structure must already be checked.
template <IndependenceOracle OM, IndependenceOracle ON>
bool trail_properties_hold(const OM& mo, const ON& no, const ElementSet& r, const Trail& t) {
  ElementSet cur = r;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const TrailStep& s = t.steps[i];
    cur.insert(s.added);
    if (!mo.is_independent(cur)) return false;
    if (s.removed) {
      cur.erase(*s.removed);
      if (!no.is_independent(cur)) return false;
      if (!same_span(no, cur, r)) return false;
    }
  }
  if (t.augmenting && !no.is_independent(cur)) return false;
  return true;
}

/// True iff every prefix satisfies both exchange properties (and the
/// augmenting condition when flagged). Throws TrailStructureError for
/// structural problems, which are not property failures.
inline bool validate_trail(const RainbowInstance& inst, const RainbowAssignment& r, const Trail& t) {
  check_trail_structure(inst, r, t);
  return trail_properties_hold(inst.m_oracle, inst.n_oracle, r.range(), t);
}

/// Applies a valid augmenting trail: each a_j is sourced from its step's set,
/// each removed r_j loses its source, survivors keep theirs.
inline RainbowAssignment apply_trail(const RainbowInstance& inst, const RainbowAssignment& r, const Trail& t) {
  if (!t.augmenting) throw PreconditionError("apply_trail: trail is not augmenting");
  if (!validate_trail(inst, r, t)) throw PreconditionError("apply_trail: trail fails the exchange properties");
  RainbowAssignment next = r;
  for (const auto& s : t.steps) {
    if (s.removed) next.clear(*r.source_of(*s.removed));
    next.assign(s.source, s.added);
  }
  if (next.size() != r.size() + 1) throw GuaranteeViolation("apply_trail: size did not grow by one");
  if (auto why = rainbow_violation(inst, next); !why.empty()) throw GuaranteeViolation("apply_trail: " + why);
  return next;
}

}  // namespace rainbow

#endif  // RAINBOW_TRAIL_HPP_
