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

#ifndef RAINBOW_INSTANCE_HPP_
#define RAINBOW_INSTANCE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/element_set.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/matroid.hpp"

namespace rainbow {

/// Position of a set in the family A_1..A_m (zero based).
using SetIndex = std::size_t;

/// Two matroids on one ground set and a family of n-element sets, each
/// independent in both. The rainbow guarantee needs m >= 2n - 1, but smaller
/// families are admitted for experiments.
struct RainbowInstance {
  MatroidOracle m_oracle;
  MatroidOracle n_oracle;
  std::vector<ElementSet> family;
  std::size_t n = 0;

  std::size_t ground_size() const { return m_oracle.ground_size(); }
  std::size_t family_size() const { return family.size(); }
  /// Whether the family is large enough for the size-n guarantee.
  bool meets_bound() const { return n == 0 || family.size() + 1 >= 2 * n; }
};

/// Throws SpecError (field "family[i]" etc.) if any instance invariant fails.
inline void validate_instance(const RainbowInstance& inst) {
  if (inst.m_oracle.ground_size() != inst.n_oracle.ground_size())
    throw SpecError("matroid_N", "ground size " + std::to_string(inst.n_oracle.ground_size()) +
                                     " differs from matroid_M ground size " +
                                     std::to_string(inst.m_oracle.ground_size()));
  for (std::size_t i = 0; i < inst.family.size(); ++i) {
    const ElementSet& a = inst.family[i];
    const std::string field = "family[" + std::to_string(i) + "]";
    if (a.size() != inst.n)
      throw SpecError(field, "has " + std::to_string(a.size()) + " elements, expected n = " + std::to_string(inst.n));
    if (a.extent() > inst.ground_size()) throw SpecError(field, "references an element outside the ground set");
    if (!inst.m_oracle.is_independent(a)) throw SpecError(field, "is dependent in matroid_M");
    if (!inst.n_oracle.is_independent(a)) throw SpecError(field, "is dependent in matroid_N");
  }
}

/// Partial choice function on the family: choice(i) is an element of A_i,
/// all chosen elements distinct. Its range is the rainbow set R.
class RainbowAssignment {
 public:
  RainbowAssignment() = default;
  explicit RainbowAssignment(std::size_t family_size) : choices_(family_size) {}

  std::size_t family_size() const { return choices_.size(); }
  const std::optional<Element>& choice(SetIndex i) const { return choices_.at(i); }
  bool uses(SetIndex i) const { return choices_.at(i).has_value(); }

  void assign(SetIndex i, Element e) {
    choices_.at(i) = e;
    refresh_range();
  }
  void clear(SetIndex i) {
    choices_.at(i).reset();
    refresh_range();
  }

  /// Number of chosen sets. Equals |range()| for a valid assignment.
  std::size_t size() const {
    std::size_t k = 0;
    for (const auto& c : choices_) k += c.has_value() ? 1 : 0;
    return k;
  }

  const ElementSet& range() const { return range_; }

  /// Index of the set that sources element e, if any.
  std::optional<SetIndex> source_of(Element e) const {
    for (SetIndex i = 0; i < choices_.size(); ++i)
      if (choices_[i] == e) return i;
    return std::nullopt;
  }

  /// (index, element) pairs in index order.
  std::vector<std::pair<SetIndex, Element>> pairs() const {
    std::vector<std::pair<SetIndex, Element>> out;
    for (SetIndex i = 0; i < choices_.size(); ++i)
      if (choices_[i]) out.emplace_back(i, *choices_[i]);
    return out;
  }

  bool operator==(const RainbowAssignment& other) const { return choices_ == other.choices_; }

 private:
  void refresh_range() {
    range_ = ElementSet{};
    for (const auto& c : choices_)
      if (c) range_.insert(*c);
  }

  std::vector<std::optional<Element>> choices_;
  ElementSet range_;
};

/// The shared rainbow invariant: choices come from their own sets, are
/// pairwise distinct, and the range is independent in both matroids.
/// Returns an empty string when valid, otherwise the first violation.
inline std::string rainbow_violation(const RainbowInstance& inst, const RainbowAssignment& r) {
  if (r.family_size() != inst.family.size()) return "assignment sized for a different family";
  ElementSet seen;
  for (const auto& [i, e] : r.pairs()) {
    if (!inst.family[i].contains(e))
      return "element " + std::to_string(e.id) + " is not in family[" + std::to_string(i) + "]";
    if (seen.contains(e)) return "element " + std::to_string(e.id) + " chosen twice";
    seen.insert(e);
  }
  if (!inst.m_oracle.is_independent(seen)) return "range is dependent in matroid_M";
  if (!inst.n_oracle.is_independent(seen)) return "range is dependent in matroid_N";
  return {};
}

inline bool is_valid_rainbow(const RainbowInstance& inst, const RainbowAssignment& r) {
  return rainbow_violation(inst, r).empty();
}

}  // namespace rainbow

#endif  // RAINBOW_INSTANCE_HPP_
