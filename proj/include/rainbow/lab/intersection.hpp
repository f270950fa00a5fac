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

#ifndef RAINBOW_LAB_INTERSECTION_HPP_
#define RAINBOW_LAB_INTERSECTION_HPP_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <vector>

#include "rainbow/element_set.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/operations.hpp"

namespace rainbow::lab {

/// Maximum-cardinality common independent set by shortest augmenting paths
/// in the exchange graph. For current I, with x outside I and y inside:
///   y -> x  when I - y + x is independent in m1,
///   x -> y  when I - y + x is independent in m2,
/// sources are {x : I + x in m1}, sinks {x : I + x in m2}. `order` fixes the
/// exploration order of elements (defaults to ascending ids), which changes
/// which maximum set is returned but not its size.
template <IndependenceOracle O1, IndependenceOracle O2>
ElementSet max_common_independent(const O1& m1, const O2& m2, std::vector<Element> order = {}) {
  const std::size_t ground = m1.ground_size();
  if (m2.ground_size() != ground) throw PreconditionError("max_common_independent: ground sizes differ");
  if (order.empty()) {
    order.resize(ground);
    for (std::size_t i = 0; i < ground; ++i) order[i] = Element{static_cast<std::uint32_t>(i)};
  }
  if (order.size() != ground) throw PreconditionError("max_common_independent: order must list every element");

  ElementSet current;
  while (true) {
    std::vector<std::optional<Element>> parent(ground);
    std::vector<bool> visited(ground, false);
    std::deque<Element> queue;
    for (Element x : order) {
      if (!current.contains(x) && m1.is_independent(current.with(x))) {
        visited[x.id] = true;
        queue.push_back(x);
      }
    }
    std::optional<Element> sink;
    while (!queue.empty() && !sink) {
      const Element u = queue.front();
      queue.pop_front();
      if (!current.contains(u)) {
        if (m2.is_independent(current.with(u))) {
          sink = u;
          break;
        }
        for (Element y : order) {
          if (visited[y.id] || !current.contains(y)) continue;
          if (m2.is_independent(current.without(y).with(u))) {
            visited[y.id] = true;
            parent[y.id] = u;
            queue.push_back(y);
          }
        }
      } else {
        for (Element x : order) {
          if (visited[x.id] || current.contains(x)) continue;
          if (m1.is_independent(current.without(u).with(x))) {
            visited[x.id] = true;
            parent[x.id] = u;
            queue.push_back(x);
          }
        }
      }
    }
    if (!sink) return current;
    for (std::optional<Element> v = sink; v; v = parent[v->id]) {
      if (current.contains(*v))
        current.erase(*v);
      else
        current.insert(*v);
    }
  }
}

}  // namespace rainbow::lab

#endif  // RAINBOW_LAB_INTERSECTION_HPP_
