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

// Instance construction: array encodings, the tight two-block family, and
// seeded random matroids / families.

#ifndef RAINBOW_LAB_GENERATORS_HPP_
#define RAINBOW_LAB_GENERATORS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rainbow/element_set.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/instance.hpp"
#include "rainbow/lab/intersection.hpp"
#include "rainbow/matroid.hpp"
#include "rainbow/operations.hpp"

namespace rainbow::lab {

using Rng = std::mt19937_64;

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// An m x n array of symbols 1..n.
struct LatinArray {
  std::size_t n = 0;
  std::vector<std::vector<std::uint32_t>> rows;

  /// Every row contains each symbol 1..n exactly once.
  bool is_row_latin() const {
    for (const auto& row : rows) {
      if (row.size() != n) return false;
      std::vector<bool> seen(n + 1, false);
      for (auto s : row) {
        if (s < 1 || s > n || seen[s]) return false;
        seen[s] = true;
      }
    }
    return true;
  }
};

/// Each cell (row, col) becomes element row * n + col. M is the column
/// partition matroid (one cell per column), N is `value_matroid` lifted to
/// cells so that equal values are parallel. The family is the rows.
inline RainbowInstance encode_array(const std::vector<std::vector<Element>>& rows, const MatroidOracle& value_matroid) {
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  std::vector<std::uint32_t> column_of;
  std::vector<Element> value_of;
  std::vector<ElementSet> family;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string field = "rows[" + std::to_string(i) + "]";
    if (rows[i].size() != n)
      throw SpecError(field, "has " + std::to_string(rows[i].size()) + " cells, expected " + std::to_string(n));
    ElementSet values;
    ElementSet cells;
    for (std::size_t c = 0; c < n; ++c) {
      const Element v = rows[i][c];
      if (v.id >= value_matroid.ground_size()) throw SpecError(field, "value outside the value matroid's ground set");
      if (values.contains(v)) throw SpecError(field, "repeats value " + std::to_string(v.id));
      values.insert(v);
      cells.insert(Element{static_cast<std::uint32_t>(i * n + c)});
      column_of.push_back(static_cast<std::uint32_t>(c));
      value_of.push_back(v);
    }
    if (!value_matroid.is_independent(values)) throw SpecError(field, "is dependent in the value matroid");
    family.push_back(std::move(cells));
  }
  RainbowInstance inst{MatroidOracle::partition(column_of, std::vector<std::uint32_t>(n, 1)),
                       parallel_lift(value_matroid, value_of), std::move(family), n};
  validate_instance(inst);
  return inst;
}

/// Symbols 1..n as a matroid in which every set of distinct symbols is
/// independent; after lifting, equal symbols clash.
inline MatroidOracle symbol_matroid(std::size_t n) {
  std::vector<std::uint32_t> block(n);
  std::iota(block.begin(), block.end(), 0U);
  return MatroidOracle::partition(std::move(block), std::vector<std::uint32_t>(n, 1));
}

/// Row-Latin rectangle as a rainbow instance: transversals with distinct
/// symbols are exactly the rainbow sets.
inline RainbowInstance encode_latin(const LatinArray& array) {
  std::vector<std::vector<Element>> rows;
  for (std::size_t i = 0; i < array.rows.size(); ++i) {
    std::vector<Element> row;
    for (auto s : array.rows[i]) {
      if (s < 1 || s > array.n)
        throw SpecError("rows[" + std::to_string(i) + "]", "symbol " + std::to_string(s) + " outside 1.." +
                                                               std::to_string(array.n));
      row.push_back(Element{s - 1});
    }
    rows.push_back(std::move(row));
  }
  return encode_array(rows, symbol_matroid(array.n));
}

/// The 2n - 2 row witness: n - 1 copies of (1, 2, ..., n) and n - 1 copies of
/// (2, 3, ..., n, 1).
inline LatinArray drisko_array(std::size_t n) {
  if (n < 2) throw SpecError("n", "the tight family needs n >= 2");
  LatinArray a{n, {}};
  std::vector<std::uint32_t> identity(n), shifted(n);
  for (std::size_t c = 0; c < n; ++c) {
    identity[c] = static_cast<std::uint32_t>(c + 1);
    shifted[c] = static_cast<std::uint32_t>((c + 1) % n + 1);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) a.rows.push_back(identity);
  for (std::size_t i = 0; i + 1 < n; ++i) a.rows.push_back(shifted);
  return a;
}

inline RainbowInstance drisko_instance(std::size_t n) { return encode_latin(drisko_array(n)); }

inline LatinArray random_row_latin(std::size_t n, std::size_t rows, Rng& rng) {
  LatinArray a{n, {}};
  std::vector<std::uint32_t> row(n);
  std::iota(row.begin(), row.end(), 1U);
  for (std::size_t i = 0; i < rows; ++i) {
    std::shuffle(row.begin(), row.end(), rng);
    a.rows.push_back(row);
  }
  return a;
}

/// A connected multigraph on n + 1 vertices (so its graphic matroid has rank
/// n) and `rows` random spanning trees of it, each in random cell order.
struct GraphicArray {
  MatroidOracle value_matroid;
  std::vector<std::vector<Element>> rows;
};

inline GraphicArray random_graphic_array(std::size_t n, std::size_t rows, Rng& rng) {
  const std::size_t vertices = n + 1;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<std::uint32_t> perm(vertices);
  std::iota(perm.begin(), perm.end(), 0U);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t v = 1; v < vertices; ++v) edges.emplace_back(perm[v], perm[uniform_index(rng, 0, v - 1)]);
  const std::size_t extra = uniform_index(rng, 1, n + 1);
  for (std::size_t i = 0; i < extra; ++i) {
    const auto u = static_cast<std::uint32_t>(uniform_index(rng, 0, vertices - 1));
    auto w = static_cast<std::uint32_t>(uniform_index(rng, 0, vertices - 2));
    if (w >= u) ++w;
    edges.emplace_back(u, w);
  }
  GraphicArray out{MatroidOracle::graphic(vertices, edges), {}};
  std::vector<Element> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = Element{static_cast<std::uint32_t>(i)};
  for (std::size_t r = 0; r < rows; ++r) {
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Element> row;
    ElementSet forest;
    for (Element e : order) {
      if (row.size() == n) break;
      if (out.value_matroid.is_independent(forest.with(e))) {
        forest.insert(e);
        row.push_back(e);
      }
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

/// A random matroid of the given species on `ground` elements, drawn so that
/// its rank is likely (not guaranteed) to be at least `min_rank`.
inline MatroidOracle random_matroid(Species species, std::size_t ground, std::size_t min_rank, Rng& rng) {
  switch (species) {
    case Species::uniform:
      return MatroidOracle::uniform(uniform_index(rng, std::min(min_rank, ground), ground), ground);
    case Species::partition: {
      const std::size_t most = std::max<std::size_t>(1, ground);
      const std::size_t blocks = uniform_index(rng, std::min(most, std::max<std::size_t>(1, (min_rank + 1) / 2)), most);
      std::vector<std::uint32_t> block_of(ground), capacity(blocks);
      for (auto& b : block_of) b = static_cast<std::uint32_t>(uniform_index(rng, 0, blocks - 1));
      for (auto& c : capacity) c = static_cast<std::uint32_t>(uniform_index(rng, 1, 2));
      return MatroidOracle::partition(std::move(block_of), std::move(capacity));
    }
    case Species::graphic: {
      const std::size_t vertices = min_rank + 1 + uniform_index(rng, 0, 2);
      std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
      for (std::size_t i = 0; i < ground; ++i) {
        const auto u = static_cast<std::uint32_t>(uniform_index(rng, 0, vertices - 1));
        auto w = static_cast<std::uint32_t>(uniform_index(rng, 0, vertices - 2));
        if (w >= u) ++w;
        edges.emplace_back(u, w);
      }
      return MatroidOracle::graphic(vertices, std::move(edges));
    }
    case Species::linear: {
      static constexpr std::uint32_t kPrimes[] = {2, 3, 5, 7};
      const std::uint32_t p = kPrimes[uniform_index(rng, 0, 3)];
      const std::size_t dim = std::max<std::size_t>(1, min_rank + uniform_index(rng, 0, 1));
      std::vector<std::vector<std::uint32_t>> columns(ground, std::vector<std::uint32_t>(dim));
      for (auto& col : columns)
        for (auto& x : col) x = static_cast<std::uint32_t>(uniform_index(rng, 0, p - 1));
      return MatroidOracle::linear(p, std::move(columns));
    }
    case Species::parallel_lift:
      break;
  }
  throw SpecError("species", "cannot draw a random " + std::string(species_name(species)) + " matroid");
}

inline Species parse_species(std::string_view name) {
  for (Species s : {Species::uniform, Species::partition, Species::graphic, Species::linear})
    if (species_name(s) == name) return s;
  throw SpecError("species", "unknown species '" + std::string(name) + "'");
}

/// m common independent n-sets of fixed matroids: each is a maximum common
/// independent set found under a random element order, truncated to its
/// first n elements in that order. Throws SpecError if the intersection's
/// maximum is below n.
inline std::vector<ElementSet> random_family(const MatroidOracle& m1, const MatroidOracle& m2, std::size_t n,
                                             std::size_t m, Rng& rng) {
  std::vector<Element> order(m1.ground_size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = Element{static_cast<std::uint32_t>(i)};
  std::vector<ElementSet> family;
  for (std::size_t k = 0; k < m; ++k) {
    std::shuffle(order.begin(), order.end(), rng);
    const ElementSet best = max_common_independent(m1, m2, order);
    if (best.size() < n)
      throw SpecError("n", "matroid intersection has maximum " + std::to_string(best.size()) + " < n = " +
                               std::to_string(n));
    ElementSet chosen;
    for (Element e : order) {
      if (chosen.size() == n) break;
      if (best.contains(e)) chosen.insert(e);
    }
    family.push_back(std::move(chosen));
  }
  return family;
}

inline RainbowInstance random_instance_from(const MatroidOracle& m1, const MatroidOracle& m2, std::size_t n,
                                            std::size_t m, std::uint64_t seed) {
  Rng rng(seed);
  RainbowInstance inst{m1, m2, random_family(m1, m2, n, m, rng), n};
  validate_instance(inst);
  return inst;
}

struct RandomInstanceOptions {
  std::size_t ground_size = 0;  // 0 selects 3n
  std::size_t max_attempts = 200;
};

/// Seeded random instance over the given species pair. Oracles are redrawn
/// until their intersection has a common independent set of size n.
inline RainbowInstance random_instance(Species m_species, Species n_species, std::size_t n, std::size_t m,
                                       std::uint64_t seed, RandomInstanceOptions opts = {}) {
  if (n == 0) throw SpecError("n", "must be at least 1");
  if (m == 0) throw SpecError("m", "must be at least 1");
  const std::size_t ground = opts.ground_size ? opts.ground_size : 3 * n;
  if (ground < n) throw SpecError("ground_size", "smaller than n");
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < opts.max_attempts; ++attempt) {
    MatroidOracle m1 = random_matroid(m_species, ground, n, rng);
    MatroidOracle m2 = random_matroid(n_species, ground, n, rng);
    if (max_common_independent(m1, m2).size() < n) continue;
    RainbowInstance inst{m1, m2, random_family(m1, m2, n, m, rng), n};
    validate_instance(inst);
    return inst;
  }
  throw SpecError("random_instance", "no " + std::string(species_name(m_species)) + "/" +
                                         std::string(species_name(n_species)) +
                                         " pair with a common independent set of size " + std::to_string(n) +
                                         " after " + std::to_string(opts.max_attempts) + " attempts");
}

/// Random independent set: greedy over a shuffled ground set,
/// stopping at a random target size.
template <IndependenceOracle O>
ElementSet random_independent(const O& m, Rng& rng, std::size_t max_size) {
  std::vector<Element> order(m.ground_size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = Element{static_cast<std::uint32_t>(i)};
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t target = uniform_index(rng, 0, max_size);
  ElementSet s;
  for (Element e : order) {
    if (s.size() >= target) break;
    if (m.is_independent(s.with(e))) s.insert(e);
  }
  return s;
}

}  // namespace rainbow::lab

#endif  // RAINBOW_LAB_GENERATORS_HPP_
