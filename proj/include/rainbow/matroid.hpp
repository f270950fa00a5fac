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

#ifndef RAINBOW_MATROID_HPP_
#define RAINBOW_MATROID_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rainbow/element_set.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/prime_field.hpp"
#include "rainbow/union_find.hpp"

namespace rainbow {

class MatroidOracle;

/// Independent iff |s| <= rank.
struct UniformSpec {
  std::size_t rank = 0;
  std::size_t ground_size = 0;
};

/// Element i lies in block block_of[i]; at most capacity[b] elements of block b.
struct PartitionSpec {
  std::vector<std::uint32_t> block_of;
  std::vector<std::uint32_t> capacity;
};

/// Element i is an edge between endpoints[i].first and endpoints[i].second.
/// Loops and parallel edges are allowed. Independent iff the edges form a forest.
struct GraphicSpec {
  std::size_t vertices = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> endpoints;
};

/// Element i is columns[i], a vector over GF(prime).
struct LinearSpec {
  std::uint32_t prime = 2;
  std::size_t dimension = 0;
  std::vector<std::vector<std::uint32_t>> columns;
};

/// Each element is a copy of value_of[i] in `base`. A set is independent iff
/// its values are pairwise distinct and the value set is independent in base,
/// i.e. equal values become parallel elements.
struct ParallelLiftSpec {
  std::shared_ptr<const MatroidOracle> base;
  std::vector<Element> value_of;
};

using MatroidSpec = std::variant<UniformSpec, PartitionSpec, GraphicSpec, LinearSpec, ParallelLiftSpec>;

enum class Species { uniform, partition, graphic, linear, parallel_lift };

inline std::string_view species_name(Species s) {
  switch (s) {
    case Species::uniform: return "uniform";
    case Species::partition: return "partition";
    case Species::graphic: return "graphic";
    case Species::linear: return "linear";
    case Species::parallel_lift: return "parallel_lift";
  }
  return "?";
}

/// An immutable independence oracle for one of the supported matroid species.
/// Every derived notion (rank, span, circuits) is computed from
/// is_independent alone, see operations.hpp.
class MatroidOracle {
 public:
  explicit MatroidOracle(MatroidSpec spec) : spec_(validate(std::move(spec))), ground_size_(ground_of(spec_)) {}

  static MatroidOracle uniform(std::size_t rank, std::size_t ground_size) {
    return MatroidOracle(UniformSpec{rank, ground_size});
  }
  static MatroidOracle partition(std::vector<std::uint32_t> block_of, std::vector<std::uint32_t> capacity) {
    return MatroidOracle(PartitionSpec{std::move(block_of), std::move(capacity)});
  }
  static MatroidOracle graphic(std::size_t vertices, std::vector<std::pair<std::uint32_t, std::uint32_t>> endpoints) {
    return MatroidOracle(GraphicSpec{vertices, std::move(endpoints)});
  }
  static MatroidOracle linear(std::uint32_t prime, std::vector<std::vector<std::uint32_t>> columns) {
    const std::size_t dim = columns.empty() ? 0 : columns.front().size();
    return MatroidOracle(LinearSpec{prime, dim, std::move(columns)});
  }

  std::size_t ground_size() const { return ground_size_; }
  Species species() const { return static_cast<Species>(spec_.index()); }
  const MatroidSpec& spec() const { return spec_; }

  bool is_independent(const ElementSet& s) const {
    if (s.extent() > ground_size_)
      throw RangeError("element id " + std::to_string(s.extent() - 1) + " outside ground set of size " +
                       std::to_string(ground_size_));
    return std::visit([&](const auto& spec) { return independent(spec, s); }, spec_);
  }

 private:
  static bool independent(const UniformSpec& u, const ElementSet& s) { return s.size() <= u.rank; }

  static bool independent(const PartitionSpec& p, const ElementSet& s) {
    std::vector<std::uint32_t> used(p.capacity.size(), 0);
    for (Element e : s) {
      const auto b = p.block_of[e.id];
      if (++used[b] > p.capacity[b]) return false;
    }
    return true;
  }

  static bool independent(const GraphicSpec& g, const ElementSet& s) {
    UnionFind uf(g.vertices);
    for (Element e : s) {
      const auto [u, w] = g.endpoints[e.id];
      if (!uf.unite(u, w)) return false;
    }
    return true;
  }

  static bool independent(const LinearSpec& l, const ElementSet& s) {
    const std::size_t k = s.size();
    if (k > l.dimension) return false;
    std::vector<std::vector<std::uint32_t>> cols;
    cols.reserve(k);
    for (Element e : s) cols.push_back(l.columns[e.id]);
    return gf::column_rank(std::move(cols), l.prime) == k;
  }

  static bool independent(const ParallelLiftSpec& p, const ElementSet& s) {
    ElementSet values;
    for (Element e : s) {
      const Element v = p.value_of[e.id];
      if (values.contains(v)) return false;
      values.insert(v);
    }
    return p.base->is_independent(values);
  }

  static std::size_t ground_of(const MatroidSpec& spec) {
    struct {
      std::size_t operator()(const UniformSpec& u) const { return u.ground_size; }
      std::size_t operator()(const PartitionSpec& p) const { return p.block_of.size(); }
      std::size_t operator()(const GraphicSpec& g) const { return g.endpoints.size(); }
      std::size_t operator()(const LinearSpec& l) const { return l.columns.size(); }
      std::size_t operator()(const ParallelLiftSpec& p) const { return p.value_of.size(); }
    } visitor;
    return std::visit(visitor, spec);
  }

  static MatroidSpec validate(MatroidSpec spec);

  MatroidSpec spec_;
  std::size_t ground_size_;
};

namespace detail {

inline std::string at(std::string_view base, std::size_t i) {
  return std::string(base) + "[" + std::to_string(i) + "]";
}

inline void check(const UniformSpec&) {}

inline void check(const PartitionSpec& p) {
  for (std::size_t i = 0; i < p.block_of.size(); ++i)
    if (p.block_of[i] >= p.capacity.size())
      throw SpecError(at("partition.block_of", i), "block label " + std::to_string(p.block_of[i]) +
                                                       " has no capacity (" + std::to_string(p.capacity.size()) +
                                                       " blocks declared)");
}

inline void check(const GraphicSpec& g) {
  for (std::size_t i = 0; i < g.endpoints.size(); ++i) {
    const auto [u, w] = g.endpoints[i];
    if (u >= g.vertices || w >= g.vertices)
      throw SpecError(at("graphic.edge", i), "endpoint outside vertex range 0.." +
                                                 std::to_string(g.vertices == 0 ? 0 : g.vertices - 1));
  }
}

inline void check(const LinearSpec& l) {
  if (!gf::is_prime(l.prime)) throw SpecError("linear.prime", std::to_string(l.prime) + " is not prime");
  for (std::size_t i = 0; i < l.columns.size(); ++i) {
    if (l.columns[i].size() != l.dimension)
      throw SpecError(at("linear.column", i), "expected " + std::to_string(l.dimension) + " entries, got " +
                                                  std::to_string(l.columns[i].size()));
    for (std::size_t r = 0; r < l.columns[i].size(); ++r)
      if (l.columns[i][r] >= l.prime)
        throw SpecError(at(at("linear.column", i), r), "entry " + std::to_string(l.columns[i][r]) +
                                                           " not reduced mod " + std::to_string(l.prime));
  }
}

inline void check(const ParallelLiftSpec& p) {
  if (!p.base) throw SpecError("parallel_lift.base", "missing base matroid");
  for (std::size_t i = 0; i < p.value_of.size(); ++i)
    if (p.value_of[i].id >= p.base->ground_size())
      throw SpecError(at("parallel_lift.value_of", i), "value outside the base ground set");
}

}  // namespace detail

inline MatroidSpec MatroidOracle::validate(MatroidSpec spec) {
  std::visit([](const auto& s) { detail::check(s); }, spec);
  return spec;
}

/// Builds and validates an oracle; throws SpecError naming the bad field.
inline MatroidOracle build_matroid(MatroidSpec spec) { return MatroidOracle(std::move(spec)); }

/// Copies `base` onto a new ground set where element i behaves as value_of[i].
/// Species closed under adding parallel copies are kept native (graphic,
/// linear, partition with unit capacities) so the result stays serializable.
inline MatroidOracle parallel_lift(const MatroidOracle& base, const std::vector<Element>& value_of) {
  for (std::size_t i = 0; i < value_of.size(); ++i)
    if (value_of[i].id >= base.ground_size())
      throw SpecError(detail::at("parallel_lift.value_of", i), "value outside the base ground set");

  if (const auto* g = std::get_if<GraphicSpec>(&base.spec())) {
    GraphicSpec lifted{g->vertices, {}};
    for (Element v : value_of) lifted.endpoints.push_back(g->endpoints[v.id]);
    return MatroidOracle(std::move(lifted));
  }
  if (const auto* l = std::get_if<LinearSpec>(&base.spec())) {
    LinearSpec lifted{l->prime, l->dimension, {}};
    for (Element v : value_of) lifted.columns.push_back(l->columns[v.id]);
    return MatroidOracle(std::move(lifted));
  }
  if (const auto* p = std::get_if<PartitionSpec>(&base.spec())) {
    bool unit = true;
    for (auto c : p->capacity) unit = unit && c <= 1;
    if (unit) {
      PartitionSpec lifted{{}, p->capacity};
      for (Element v : value_of) lifted.block_of.push_back(p->block_of[v.id]);
      return MatroidOracle(std::move(lifted));
    }
  }
  return MatroidOracle(ParallelLiftSpec{std::make_shared<const MatroidOracle>(base), value_of});
}

}  // namespace rainbow

#endif  // RAINBOW_MATROID_HPP_
