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

#include "rainbow/lab/harness.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "test_oracles.hpp"

namespace rainbow::lab {
namespace {

using rainbow::testing::E;
using rainbow::testing::S;

// 4-cycle 0-1-2-3-0 as e0..e3 plus the chord e4 = 02.
MatroidOracle CycleWithChord() { return MatroidOracle::graphic(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}); }

TEST(CheckExchangeStabilityTest, EmptyExchangeReducesToMembership) {
  const auto g = CycleWithChord();
  // C({e0,e1,e2}, e3) = {e0,e1,e2}.
  EXPECT_TRUE(check_exchange_stability(g, S({0, 1, 2}), {}, {}, E(3), E(1)));
}

TEST(CheckExchangeStabilityTest, SingleSwapOnCycleWithChord) {
  const auto g = CycleWithChord();
  const auto& spec = std::get<GraphicSpec>(g.spec());
  // i = path e0 e1 e2; swap e0 out for the chord e4; then e3 still needs e2.
  const ElementSet swapped = S({1, 2, 4});
  const auto circuits = rainbow::testing::circuits_by_enumeration(
      [&](const ElementSet& s) { return rainbow::testing::forest_by_enumeration(4, spec.endpoints, s); },
      swapped.with(E(3)));
  ASSERT_EQ(circuits.size(), 1u);
  ASSERT_TRUE(circuits.front().contains(E(2)));
  EXPECT_TRUE(check_exchange_stability(g, S({0, 1, 2}), {E(0)}, {E(4)}, E(3), E(2)));
}

TEST(CheckExchangeStabilityTest, NamesTheFailedPremise) {
  const auto g = CycleWithChord();
  auto message = [&](auto&& fn) {
    try {
      fn();
    } catch (const PreconditionError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message([&] { check_exchange_stability(g, S({0, 1, 2}), {E(3)}, {E(4)}, E(3), E(2)); }).find("X subset of i"),
            std::string::npos);
  EXPECT_NE(message([&] { check_exchange_stability(g, S({0, 1, 2}), {E(0)}, {E(4)}, E(3), E(1)); }).find("x_next"),
            std::string::npos);
  EXPECT_NE(message([&] { check_exchange_stability(g, S({0, 1, 2}), {E(0)}, {E(4)}, E(4), E(2)); }).find("y_next not in Y"),
            std::string::npos);
  EXPECT_NE(message([&] { check_exchange_stability(g, S({0, 1, 2, 3}), {}, {}, E(4), E(0)); }).find("i independent"),
            std::string::npos);
}

TEST(CircuitsWithinTest, TriangleWithPendantEdge) {
  const auto g = MatroidOracle::graphic(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  EXPECT_EQ(circuits_within(g, S({0, 1, 2, 3})), (std::vector<ElementSet>{S({0, 1, 2})}));
}

class HarnessTest : public ::testing::TestWithParam<Species> {
 protected:
  HarnessOptions opts{250, 5, 400};
};

TEST_P(HarnessTest, FundamentalCircuit) {
  const auto r = run_fundamental_circuit_cases(GetParam(), opts);
  EXPECT_TRUE(r.passed(opts.quota)) << r.accepted << " accepted, " << r.first_counterexample;
}

TEST_P(HarnessTest, Augmentation) {
  const auto r = run_augmentation_cases(GetParam(), opts);
  EXPECT_TRUE(r.passed(opts.quota)) << r.accepted << " accepted, " << r.first_counterexample;
}

TEST_P(HarnessTest, CircuitElimination) {
  const auto r = run_elimination_cases(GetParam(), opts);
  EXPECT_TRUE(r.passed(opts.quota)) << r.accepted << " accepted, " << r.first_counterexample;
}

TEST_P(HarnessTest, ExchangeCircuitStability) {
  const auto r = run_exchange_stability_cases(GetParam(), opts);
  EXPECT_TRUE(r.passed(opts.quota)) << r.accepted << " accepted, " << r.first_counterexample;
}

INSTANTIATE_TEST_SUITE_P(AllSpecies, HarnessTest,
                         ::testing::Values(Species::uniform, Species::partition, Species::graphic, Species::linear),
                         [](const auto& info) { return std::string(species_name(info.param)); });

// A deliberately wrong "fact" must be caught: flip the verdict and the
// harness reports counterexamples.
TEST(HarnessRunnerTest, ReportsCounterexamples) {
  HarnessOptions opts{50, 1, 10};
  const auto r = detail::run_cases("always_wrong", Species::uniform, opts,
                                   [](const MatroidOracle&, Rng&, std::string& why) -> std::optional<bool> {
                                     why = "forced";
                                     return false;
                                   });
  EXPECT_EQ(r.counterexamples, 50u);
  EXPECT_EQ(r.first_counterexample, "forced");
  EXPECT_FALSE(r.passed(50));
}

}  // namespace
}  // namespace rainbow::lab
