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

// Instance documents:
//   {"ground": [names], "matroid_M": {...}, "matroid_N": {...},
//    "n": int, "family": [[names]]}
// with matroid descriptions
//   {"type": "uniform", "rank": r}
//   {"type": "partition", "block_of": {name: label}, "capacity": {label: int}}
//   {"type": "graphic", "vertices": v, "edge": {name: [u, w]}}
//   {"type": "linear", "prime": p, "column": {name: [ints]}}
// Element names map to dense ids in ground order.

#ifndef RAINBOW_IO_JSON_IO_HPP_
#define RAINBOW_IO_JSON_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/instance.hpp"
#include "rainbow/lab/verify.hpp"
#include "rainbow/matroid.hpp"
#include "rainbow/solver.hpp"

namespace rainbow::io {

using Json = nlohmann::ordered_json;

/// An instance together with the names used in its document.
struct NamedInstance {
  RainbowInstance instance;
  std::vector<std::string> names;     // element id -> name
  std::vector<std::string> m_labels;  // partition block id -> label (partition species only)
  std::vector<std::string> n_labels;
};

namespace detail {

inline std::string key(std::string_view path, std::string_view k) { return std::string(path) + "." + std::string(k); }
inline std::string idx(std::string_view path, std::size_t i) {
  return std::string(path) + "[" + std::to_string(i) + "]";
}

inline const Json& member(const Json& obj, std::string_view path, const char* name) {
  if (!obj.is_object()) throw SpecError(std::string(path), "expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) throw SpecError(key(path, name), "missing");
  return *it;
}

inline std::uint64_t natural(const Json& v, const std::string& path) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(v.get<std::int64_t>());
  throw SpecError(path, "expected a non-negative integer");
}

inline std::uint32_t natural32(const Json& v, const std::string& path) {
  const std::uint64_t x = natural(v, path);
  if (x > 0xFFFFFFFFULL) throw SpecError(path, "value too large");
  return static_cast<std::uint32_t>(x);
}

using NameIndex = std::unordered_map<std::string, std::uint32_t>;

// Object keyed by element name -> value per element id; every ground element
// must appear exactly once.
template <class F>
void per_element(const Json& obj, const std::string& path, const NameIndex& ids, std::size_t ground, F&& on_entry) {
  if (!obj.is_object()) throw SpecError(path, "expected an object keyed by element name");
  std::vector<bool> seen(ground, false);
  for (const auto& [name, value] : obj.items()) {
    auto it = ids.find(name);
    if (it == ids.end()) throw SpecError(key(path, name), "unknown element");
    seen[it->second] = true;
    on_entry(it->second, value, key(path, name));
  }
  for (std::size_t i = 0; i < ground; ++i)
    if (!seen[i]) throw SpecError(path, "no entry for an element of the ground set");
}

inline std::pair<MatroidOracle, std::vector<std::string>> parse_matroid(const Json& j, const std::string& path,
                                                                        const NameIndex& ids, std::size_t ground) {
  const Json& type = member(j, path, "type");
  if (!type.is_string()) throw SpecError(key(path, "type"), "expected a string");
  const std::string t = type.get<std::string>();
  try {
    if (t == "uniform") {
      const auto r = natural(member(j, path, "rank"), key(path, "rank"));
      return {MatroidOracle::uniform(r, ground), {}};
    }
    if (t == "partition") {
      const Json& caps = member(j, path, "capacity");
      if (!caps.is_object()) throw SpecError(key(path, "capacity"), "expected an object keyed by block label");
      std::vector<std::string> labels;
      std::map<std::string, std::uint32_t> label_id;
      std::vector<std::uint32_t> capacity;
      for (const auto& [label, c] : caps.items()) {
        label_id[label] = static_cast<std::uint32_t>(labels.size());
        labels.push_back(label);
        capacity.push_back(natural32(c, key(key(path, "capacity"), label)));
      }
      std::vector<std::uint32_t> block_of(ground);
      per_element(member(j, path, "block_of"), key(path, "block_of"), ids, ground,
                  [&](std::uint32_t id, const Json& v, const std::string& at) {
                    if (!v.is_string()) throw SpecError(at, "expected a block label string");
                    auto it = label_id.find(v.get<std::string>());
                    if (it == label_id.end()) throw SpecError(at, "block label '" + v.get<std::string>() + "' has no capacity");
                    block_of[id] = it->second;
                  });
      return {MatroidOracle::partition(std::move(block_of), std::move(capacity)), std::move(labels)};
    }
    if (t == "graphic") {
      const auto vertices = natural(member(j, path, "vertices"), key(path, "vertices"));
      std::vector<std::pair<std::uint32_t, std::uint32_t>> edges(ground);
      per_element(member(j, path, "edge"), key(path, "edge"), ids, ground,
                  [&](std::uint32_t id, const Json& v, const std::string& at) {
                    if (!v.is_array() || v.size() != 2) throw SpecError(at, "expected [u, w]");
                    edges[id] = {natural32(v[0], idx(at, 0)), natural32(v[1], idx(at, 1))};
                    if (edges[id].first >= vertices || edges[id].second >= vertices)
                      throw SpecError(at, "endpoint outside vertex range");
                  });
      return {MatroidOracle::graphic(vertices, std::move(edges)), {}};
    }
    if (t == "linear") {
      const auto p = natural32(member(j, path, "prime"), key(path, "prime"));
      std::vector<std::vector<std::uint32_t>> columns(ground);
      std::size_t dim = 0;
      bool first = true;
      per_element(member(j, path, "column"), key(path, "column"), ids, ground,
                  [&](std::uint32_t id, const Json& v, const std::string& at) {
                    if (!v.is_array()) throw SpecError(at, "expected an array of field entries");
                    if (first) dim = v.size();
                    first = false;
                    if (v.size() != dim) throw SpecError(at, "column length differs from the others");
                    for (std::size_t r = 0; r < v.size(); ++r) {
                      const auto x = natural32(v[r], idx(at, r));
                      if (x >= p) throw SpecError(idx(at, r), "entry not reduced mod " + std::to_string(p));
                      columns[id].push_back(x);
                    }
                  });
      if (!gf::is_prime(p)) throw SpecError(key(path, "prime"), std::to_string(p) + " is not prime");
      return {MatroidOracle(LinearSpec{p, dim, std::move(columns)}), {}};
    }
  } catch (const SpecError& e) {
    // Errors raised by the oracle constructor name species fields; anchor them.
    if (e.field().rfind(path, 0) == 0) throw;
    throw SpecError(path + "." + e.field(), e.message());
  }
  throw SpecError(key(path, "type"), "unknown matroid type '" + t + "'");
}

inline Json matroid_json(const MatroidOracle& m, const std::vector<std::string>& names,
                         const std::vector<std::string>& labels, const char* which) {
  Json j;
  switch (m.species()) {
    case Species::uniform:
      j["type"] = "uniform";
      j["rank"] = std::get<UniformSpec>(m.spec()).rank;
      break;
    case Species::partition: {
      const auto& p = std::get<PartitionSpec>(m.spec());
      auto label = [&](std::uint32_t b) { return b < labels.size() ? labels[b] : "b" + std::to_string(b); };
      j["type"] = "partition";
      Json block_of = Json::object();
      for (std::size_t i = 0; i < p.block_of.size(); ++i) block_of[names[i]] = label(p.block_of[i]);
      Json capacity = Json::object();
      for (std::uint32_t b = 0; b < p.capacity.size(); ++b) capacity[label(b)] = p.capacity[b];
      j["block_of"] = std::move(block_of);
      j["capacity"] = std::move(capacity);
      break;
    }
    case Species::graphic: {
      const auto& g = std::get<GraphicSpec>(m.spec());
      j["type"] = "graphic";
      j["vertices"] = g.vertices;
      Json edge = Json::object();
      for (std::size_t i = 0; i < g.endpoints.size(); ++i) edge[names[i]] = {g.endpoints[i].first, g.endpoints[i].second};
      j["edge"] = std::move(edge);
      break;
    }
    case Species::linear: {
      const auto& l = std::get<LinearSpec>(m.spec());
      j["type"] = "linear";
      j["prime"] = l.prime;
      Json column = Json::object();
      for (std::size_t i = 0; i < l.columns.size(); ++i) column[names[i]] = l.columns[i];
      j["column"] = std::move(column);
      break;
    }
    case Species::parallel_lift:
      throw SpecError(which, "a parallel-lifted matroid of this base species has no document form");
  }
  return j;
}

}  // namespace detail

inline NamedInstance parse_document(const Json& doc) {
  if (!doc.is_object()) throw SpecError("$", "expected an object");
  const Json& ground = detail::member(doc, "$", "ground");
  if (!ground.is_array()) throw SpecError("$.ground", "expected an array of names");
  NamedInstance out{RainbowInstance{MatroidOracle::uniform(0, 0), MatroidOracle::uniform(0, 0), {}, 0}, {}, {}, {}};
  detail::NameIndex ids;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (!ground[i].is_string()) throw SpecError(detail::idx("$.ground", i), "expected a string");
    const std::string name = ground[i].get<std::string>();
    if (!ids.emplace(name, static_cast<std::uint32_t>(i)).second)
      throw SpecError(detail::idx("$.ground", i), "duplicate element name '" + name + "'");
    out.names.push_back(name);
  }
  const std::size_t size = out.names.size();
  auto [mo, ml] = detail::parse_matroid(detail::member(doc, "$", "matroid_M"), "$.matroid_M", ids, size);
  auto [no, nl] = detail::parse_matroid(detail::member(doc, "$", "matroid_N"), "$.matroid_N", ids, size);
  out.m_labels = std::move(ml);
  out.n_labels = std::move(nl);
  const std::size_t n = detail::natural(detail::member(doc, "$", "n"), "$.n");

  const Json& family = detail::member(doc, "$", "family");
  if (!family.is_array()) throw SpecError("$.family", "expected an array of element-name lists");
  std::vector<ElementSet> sets;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::string at = detail::idx("$.family", i);
    if (!family[i].is_array()) throw SpecError(at, "expected an array of names");
    ElementSet s;
    for (std::size_t k = 0; k < family[i].size(); ++k) {
      const Json& v = family[i][k];
      if (!v.is_string()) throw SpecError(detail::idx(at, k), "expected an element name");
      auto it = ids.find(v.get<std::string>());
      if (it == ids.end()) throw SpecError(detail::idx(at, k), "unknown element '" + v.get<std::string>() + "'");
      const Element e{it->second};
      if (s.contains(e)) throw SpecError(detail::idx(at, k), "duplicate element in set");
      s.insert(e);
    }
    sets.push_back(std::move(s));
  }
  out.instance = RainbowInstance{std::move(mo), std::move(no), std::move(sets), n};
  try {
    validate_instance(out.instance);
  } catch (const SpecError& e) {
    throw SpecError("$." + e.field(), e.message());
  }
  return out;
}

inline NamedInstance parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError("$", std::string("malformed JSON: ") + e.what());
  }
  return parse_document(doc);
}

/// Names elements e0, e1, ... and partition blocks b0, b1, ...
inline NamedInstance with_default_names(RainbowInstance inst) {
  NamedInstance out{std::move(inst), {}, {}, {}};
  for (std::size_t i = 0; i < out.instance.ground_size(); ++i) out.names.push_back("e" + std::to_string(i));
  return out;
}

inline Json to_json(const NamedInstance& ni) {
  const RainbowInstance& inst = ni.instance;
  Json doc;
  doc["ground"] = ni.names;
  doc["matroid_M"] = detail::matroid_json(inst.m_oracle, ni.names, ni.m_labels, "matroid_M");
  doc["matroid_N"] = detail::matroid_json(inst.n_oracle, ni.names, ni.n_labels, "matroid_N");
  doc["n"] = inst.n;
  Json family = Json::array();
  for (const auto& a : inst.family) {
    Json set = Json::array();
    for (Element e : a) set.push_back(ni.names[e.id]);
    family.push_back(std::move(set));
  }
  doc["family"] = std::move(family);
  return doc;
}

inline Json result_json(const NamedInstance& ni, const SolveResult& result) {
  Json doc;
  doc["status"] = result.status == SolveStatus::solved ? "solved" : "infeasible";
  doc["n"] = ni.instance.n;
  doc["size"] = result.assignment.size();
  Json assignment = Json::array();
  for (const auto& [i, e] : result.assignment.pairs()) assignment.push_back({{"set", i}, {"element", ni.names[e.id]}});
  doc["assignment"] = std::move(assignment);
  Json ids = Json::object();
  for (std::size_t i = 0; i < ni.names.size(); ++i) ids[ni.names[i]] = i;
  doc["element_ids"] = std::move(ids);
  doc["fallback_used"] = result.stats.fallback_used();
  doc["oracle_calls"] = {{"M", result.stats.m_calls}, {"N", result.stats.n_calls}};
  return doc;
}

inline Json error_json(const std::string& message) {
  Json doc;
  doc["status"] = "error";
  doc["message"] = message;
  return doc;
}

inline Json report_json(const lab::VerificationReport& r) {
  Json j;
  j["digest"] = r.digest;
  j["n"] = r.n;
  j["m"] = r.m;
  j["solver_size"] = r.solver_size;
  j["brute_force_size"] = r.brute_force_size;
  j["agreement"] = r.agreement;
  j["fallback_used"] = r.fallback_used;
  j["oracle_calls"] = {{"solver_M", r.solver_m_calls},
                       {"solver_N", r.solver_n_calls},
                       {"brute_force_M", r.brute_force_m_calls},
                       {"brute_force_N", r.brute_force_n_calls}};
  return j;
}

}  // namespace rainbow::io

#endif  // RAINBOW_IO_JSON_IO_HPP_
