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

#ifndef RAINBOW_LAB_BRUTE_FORCE_HPP_
#define RAINBOW_LAB_BRUTE_FORCE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "rainbow/instance.hpp"
#include "rainbow/operations.hpp"

namespace rainbow::lab {

struct BruteForceStats {
  std::uint64_t m_calls = 0;
  std::uint64_t n_calls = 0;
  std::uint64_t nodes = 0;
};

namespace detail {

template <IndependenceOracle OM, IndependenceOracle ON>
class RainbowSearch {
 public:
  RainbowSearch(const RainbowInstance& inst, const OM& mo, const ON& no, std::size_t target, std::uint64_t& nodes)
      : inst_(inst),
        mo_(mo),
        no_(no),
        target_(target),
        nodes_(nodes),
        current_(inst.family.size()),
        dead_(inst.family.size() + 1) {}

  std::optional<RainbowAssignment> run() {
    if (descend(0, 0)) return current_;
    return std::nullopt;
  }

 private:
  bool descend(SetIndex index, std::size_t chosen) {
    ++nodes_;
    if (chosen == target_) return true;
    const std::size_t remaining = inst_.family.size() - index;
    if (chosen + remaining < target_) return false;
    // The outcome below depends only on (index, range); remember failures.
    if (dead_[index].contains(range_)) return false;
    for (Element e : inst_.family[index]) {
      if (range_.contains(e)) continue;
      ElementSet trial = range_.with(e);
      if (!mo_.is_independent(trial) || !no_.is_independent(trial)) continue;
      current_.assign(index, e);
      range_ = std::move(trial);
      if (descend(index + 1, chosen + 1)) return true;
      current_.clear(index);
      range_.erase(e);
    }
    if (descend(index + 1, chosen)) return true;
    dead_[index].insert(range_);
    return false;
  }

  const RainbowInstance& inst_;
  const OM& mo_;
  const ON& no_;
  std::size_t target_;
  std::uint64_t& nodes_;
  RainbowAssignment current_;
  ElementSet range_;
  std::vector<std::unordered_set<ElementSet>> dead_;
};

}  // namespace detail

/// Depth-first search over the family in index order: each set contributes
/// one unused element (ids ascending) or is skipped. Returns the first
/// assignment of size `target` in that order, or nullopt if none exists.
inline std::optional<RainbowAssignment> brute_force_rainbow(const RainbowInstance& inst, std::size_t target,
                                                            BruteForceStats* stats = nullptr) {
  BruteForceStats local;
  BruteForceStats& s = stats ? *stats : local;
  CountingOracle mo(inst.m_oracle, s.m_calls);
  CountingOracle no(inst.n_oracle, s.n_calls);
  detail::RainbowSearch search(inst, mo, no, target, s.nodes);
  return search.run();
}

/// Size of a largest rainbow set, capped at n.
inline std::size_t max_rainbow_size(const RainbowInstance& inst, BruteForceStats* stats = nullptr) {
  for (std::size_t target = inst.n; target > 0; --target)
    if (brute_force_rainbow(inst, target, stats)) return target;
  return 0;
}

}  // namespace rainbow::lab

#endif  // RAINBOW_LAB_BRUTE_FORCE_HPP_
