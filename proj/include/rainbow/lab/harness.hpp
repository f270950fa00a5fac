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

// Randomized property harnesses for the matroid facts the solver relies on:
// fundamental circuits, augmentation, circuit elimination, and circuit
// stability under a sequence of exchanges. Cases that do not meet a fact's
// premises are rejected and do not count toward the quota.

#ifndef RAINBOW_LAB_HARNESS_HPP_
#define RAINBOW_LAB_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow/element_set.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/lab/generators.hpp"
#include "rainbow/matroid.hpp"
#include "rainbow/operations.hpp"

namespace rainbow::lab {

struct HarnessReport {
  std::string name;
  Species species = Species::uniform;
  std::size_t accepted = 0;
  std::size_t attempts = 0;
  std::size_t counterexamples = 0;
  std::string first_counterexample;

  bool passed(std::size_t quota) const { return counterexamples == 0 && accepted >= quota; }
};

/// Every circuit contained in s, by direct subset enumeration (|s| <= ~12).
template <IndependenceOracle O>
std::vector<ElementSet> circuits_within(const O& m, const ElementSet& s) {
  const std::vector<Element> items = s.to_vector();
  std::vector<ElementSet> out;
  const std::uint64_t total = std::uint64_t{1} << items.size();
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    ElementSet sub;
    for (std::size_t b = 0; b < items.size(); ++b)
      if ((mask >> b) & 1U) sub.insert(items[b]);
    if (m.is_independent(sub)) continue;
    bool minimal = true;
    for (Element y : sub) {
      if (!m.is_independent(sub.without(y))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(std::move(sub));
  }
  return out;
}

/// Checks the stated conclusion on one input after verifying every premise.
/// Throws PreconditionError naming the first premise that fails; returns
/// whether x_next lies in C((i \ X) | Y, y_next).
template <IndependenceOracle O>
bool check_exchange_stability(const O& m, const ElementSet& i, const std::vector<Element>& x_list,
                  const std::vector<Element>& y_list, Element y_next, Element x_next) {
  auto premise = [](bool ok, const char* what) {
    if (!ok) throw PreconditionError(std::string("premise failed: ") + what);
  };
  premise(m.is_independent(i), "i independent");
  premise(x_list.size() == y_list.size(), "|X| = |Y|");
  const ElementSet xs(x_list);
  const ElementSet ys(y_list);
  premise(xs.size() == x_list.size() && ys.size() == y_list.size(), "X and Y without repeats");
  premise(xs.is_subset_of(i), "X subset of i");
  const ElementSet span_i = span(m, i);
  premise(ys.is_subset_of(span_i - i), "Y subset of span(i) \\ i");
  const ElementSet swapped = (i - xs) | ys;
  premise(span(m, swapped) == span_i, "span((i \\ X) | Y) = span(i)");
  premise(span_i.contains(y_next) && !i.contains(y_next), "y_next in span(i) \\ i");
  premise(!ys.contains(y_next), "y_next not in Y");
  const ElementSet c_next = fundamental_circuit(m, i, y_next);
  premise(c_next.contains(x_next) && !xs.contains(x_next), "x_next in C(i, y_next) \\ X");
  for (Element y : y_list) premise(!fundamental_circuit(m, i, y).contains(x_next), "x_next outside every C(i, y_j)");
  return fundamental_circuit(m, swapped, y_next).contains(x_next);
}

struct HarnessOptions {
  std::size_t quota = 1000;
  std::uint64_t seed = 1;
  std::size_t max_attempts_factor = 400;
};

namespace detail {

// Small random matroid; ground 5..9 keeps exhaustive subset scans cheap.
inline MatroidOracle harness_matroid(Species species, Rng& rng) {
  const std::size_t ground = uniform_index(rng, 5, 9);
  const std::size_t rank_hint = uniform_index(rng, 2, 4);
  return random_matroid(species, ground, rank_hint, rng);
}

template <class Case>
HarnessReport run_cases(const std::string& name, Species species, const HarnessOptions& opts, Case&& one_case) {
  HarnessReport report;
  report.name = name;
  report.species = species;
  Rng rng(opts.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(species));
  std::optional<MatroidOracle> m;
  const std::size_t limit = opts.quota * opts.max_attempts_factor;
  while (report.accepted < opts.quota && report.attempts < limit) {
    if (report.attempts % 8 == 0) m = harness_matroid(species, rng);
    ++report.attempts;
    std::string failure;
    const std::optional<bool> verdict = one_case(*m, rng, failure);
    if (!verdict) continue;
    ++report.accepted;
    if (!*verdict) {
      if (report.counterexamples++ == 0) report.first_counterexample = failure;
    }
  }
  return report;
}

inline std::string describe(const char* what, const ElementSet& a, const ElementSet& b) {
  std::ostringstream os;
  os << what << ' ' << a << ' ' << b;
  return os.str();
}

}  // namespace detail

/// Fundamental circuit: C(i, x) + x is the only circuit inside i + x, and
/// every exchange i + x - a (a in C) is independent with the span of i.
inline HarnessReport run_fundamental_circuit_cases(Species species, const HarnessOptions& opts = {}) {
  return detail::run_cases("fundamental_circuit", species, opts,
                           [](const MatroidOracle& m, Rng& rng, std::string& why) -> std::optional<bool> {
                             const ElementSet i = random_independent(m, rng, 8);
                             std::vector<Element> outside;
                             for (std::uint32_t id = 0; id < m.ground_size(); ++id)
                               if (!i.contains(Element{id}) && !m.is_independent(i.with(Element{id})))
                                 outside.push_back(Element{id});
                             if (outside.empty()) return std::nullopt;
                             const Element x = outside[uniform_index(rng, 0, outside.size() - 1)];
                             const ElementSet c = fundamental_circuit(m, i, x);
                             const auto all = circuits_within(m, i.with(x));
                             if (all.size() != 1 || all.front() != c.with(x)) {
                               why = detail::describe("circuit not unique in i + x:", i, c);
                               return false;
                             }
                             const ElementSet base = span(m, i);
                             for (Element a : c) {
                               const ElementSet swapped = i.with(x).without(a);
                               if (!m.is_independent(swapped) || span(m, swapped) != base) {
                                 why = detail::describe("exchange broke independence or span:", i, c);
                                 return false;
                               }
                             }
                             return true;
                           });
}

/// Augmentation: augment_from(i, j) picks at least |j| - |i| elements of
/// j \ i keeping i independent.
inline HarnessReport run_augmentation_cases(Species species, const HarnessOptions& opts = {}) {
  return detail::run_cases("augment_from", species, opts,
                           [](const MatroidOracle& m, Rng& rng, std::string& why) -> std::optional<bool> {
                             const ElementSet i = random_independent(m, rng, m.ground_size());
                             const ElementSet j = random_independent(m, rng, m.ground_size());
                             if (i.size() >= j.size()) return std::nullopt;
                             const ElementSet added = augment_from(m, i, j);
                             const bool ok = added.is_subset_of(j - i) && added.size() + i.size() >= j.size() &&
                                             m.is_independent(i | added);
                             if (!ok) why = detail::describe("augmentation failed:", i, j);
                             return ok;
                           });
}

/// Circuit elimination: for circuits c1, c2 sharing e, with f in c1 \ c2, the
/// returned set is a circuit containing f, avoiding e, inside c1 | c2.
inline HarnessReport run_elimination_cases(Species species, const HarnessOptions& opts = {}) {
  return detail::run_cases(
      "eliminate_circuit", species, opts, [](const MatroidOracle& m, Rng& rng, std::string& why) -> std::optional<bool> {
        auto random_circuit = [&]() -> std::optional<ElementSet> {
          const ElementSet i = random_independent(m, rng, m.ground_size());
          std::vector<Element> outside;
          for (std::uint32_t id = 0; id < m.ground_size(); ++id)
            if (!i.contains(Element{id}) && !m.is_independent(i.with(Element{id}))) outside.push_back(Element{id});
          if (outside.empty()) return std::nullopt;
          const Element x = outside[uniform_index(rng, 0, outside.size() - 1)];
          return fundamental_circuit(m, i, x).with(x);
        };
        const auto c1 = random_circuit();
        const auto c2 = random_circuit();
        if (!c1 || !c2) return std::nullopt;
        const std::vector<Element> shared = (*c1 & *c2).to_vector();
        const std::vector<Element> only = (*c1 - *c2).to_vector();
        if (shared.empty() || only.empty()) return std::nullopt;
        const Element e = shared[uniform_index(rng, 0, shared.size() - 1)];
        const Element f = only[uniform_index(rng, 0, only.size() - 1)];
        const ElementSet c3 = eliminate_circuit(m, *c1, *c2, e, f);
        const bool ok = is_circuit(m, c3) && c3.contains(f) && !c3.contains(e) && c3.is_subset_of(*c1 | *c2);
        if (!ok) why = detail::describe("elimination witness invalid:", *c1, *c2);
        return ok;
      });
}

/// Circuit stability under exchanges: random (i, X, Y, y_next, x_next)
/// meeting every premise of check_exchange_stability.
inline HarnessReport run_exchange_stability_cases(Species species, const HarnessOptions& opts = {}) {
  return detail::run_cases(
      "exchange_circuit_stability", species, opts,
      [](const MatroidOracle& m, Rng& rng, std::string& why) -> std::optional<bool> {
        const ElementSet i = random_independent(m, rng, m.ground_size());
        const std::vector<Element> outside = (span(m, i) - i).to_vector();
        if (i.empty() || outside.empty()) return std::nullopt;
        const Element y_next = outside[uniform_index(rng, 0, outside.size() - 1)];
        std::vector<Element> pool;
        for (Element y : outside)
          if (y != y_next) pool.push_back(y);
        std::vector<Element> members = i.to_vector();
        std::shuffle(pool.begin(), pool.end(), rng);
        std::shuffle(members.begin(), members.end(), rng);
        const std::size_t k = uniform_index(rng, 0, std::min(pool.size(), members.size()));
        const std::vector<Element> ys(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
        const std::vector<Element> xs(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(k));
        if (span(m, (i - ElementSet(xs)) | ElementSet(ys)) != span(m, i)) return std::nullopt;
        ElementSet candidates = fundamental_circuit(m, i, y_next) - ElementSet(xs);
        for (Element y : ys) candidates -= fundamental_circuit(m, i, y);
        if (candidates.empty()) return std::nullopt;
        const std::vector<Element> cand = candidates.to_vector();
        const Element x_next = cand[uniform_index(rng, 0, cand.size() - 1)];
        bool holds = false;
        try {
          holds = check_exchange_stability(m, i, xs, ys, y_next, x_next);
        } catch (const PreconditionError&) {
          return std::nullopt;
        }
        if (!holds) why = detail::describe("conclusion failed:", i, ElementSet(ys));
        return holds;
      });
}

inline std::vector<HarnessReport> run_all_harnesses(const HarnessOptions& opts = {}) {
  std::vector<HarnessReport> out;
  for (Species s : {Species::uniform, Species::partition, Species::graphic, Species::linear}) {
    out.push_back(run_fundamental_circuit_cases(s, opts));
    out.push_back(run_augmentation_cases(s, opts));
    out.push_back(run_elimination_cases(s, opts));
    out.push_back(run_exchange_stability_cases(s, opts));
  }
  return out;
}

}  // namespace rainbow::lab

#endif  // RAINBOW_LAB_HARNESS_HPP_
