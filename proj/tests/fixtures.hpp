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

// Small hand-built instances shared by the solver-level tests.

#ifndef RAINBOW_TESTS_FIXTURES_HPP_
#define RAINBOW_TESTS_FIXTURES_HPP_

#include <cstdint>
#include <vector>

#include "rainbow/instance.hpp"
#include "rainbow/matroid.hpp"

namespace rainbow::testing {

/// Cell (column c, symbol s) for c, s in {1, 2}, id (c - 1) * 2 + (s - 1).
constexpr Element Cell(std::uint32_t c, std::uint32_t s) { return Element{(c - 1) * 2 + (s - 1)}; }

/// M allows one cell per column, N one cell per symbol.
/// A1 = {(1,1), (2,2)}, A2 = A3 = {(1,2), (2,1)}.
inline RainbowInstance column_symbol_instance() {
  const ElementSet a1(std::vector<Element>{Cell(1, 1), Cell(2, 2)});
  const ElementSet a2(std::vector<Element>{Cell(1, 2), Cell(2, 1)});
  return {MatroidOracle::partition({0, 0, 1, 1}, {1, 1}), MatroidOracle::partition({0, 1, 0, 1}, {1, 1}),
          {a1, a2, a2}, 2};
}

/// M = N = uniform rank 2 on {a, b, c} = {0, 1, 2}; A1 = {a,b}, A2 = {a,c}, A3 = {b,c}.
inline RainbowInstance uniform_instance() {
  const auto m = MatroidOracle::uniform(2, 3);
  auto set = [](std::uint32_t x, std::uint32_t y) { return ElementSet(std::vector<Element>{Element{x}, Element{y}}); };
  return {m, m, {set(0, 1), set(0, 2), set(1, 2)}, 2};
}

}  // namespace rainbow::testing

#endif  // RAINBOW_TESTS_FIXTURES_HPP_
