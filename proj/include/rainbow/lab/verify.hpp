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

#ifndef RAINBOW_LAB_VERIFY_HPP_
#define RAINBOW_LAB_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <string>
#include <variant>

#include "rainbow/instance.hpp"
#include "rainbow/lab/brute_force.hpp"
#include "rainbow/matroid.hpp"
#include "rainbow/solver.hpp"

namespace rainbow::lab {

struct VerificationReport {
  std::string digest;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t solver_size = 0;
  std::size_t brute_force_size = 0;
  bool agreement = false;
  bool fallback_used = false;
  std::uint64_t solver_m_calls = 0;
  std::uint64_t solver_n_calls = 0;
  std::uint64_t brute_force_m_calls = 0;
  std::uint64_t brute_force_n_calls = 0;
};

namespace detail {

class Fnv1a {
 public:
  void add(std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h_ ^= (v >> (8 * b)) & 0xFFU;
      h_ *= 1099511628211ULL;
    }
  }
  void add(const ElementSet& s) {
    add(s.size());
    for (Element e : s) add(e.id);
  }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 1469598103934665603ULL;
};

inline void hash_matroid(Fnv1a& h, const MatroidOracle& m) {
  h.add(static_cast<std::uint64_t>(m.species()));
  h.add(m.ground_size());
  struct {
    Fnv1a& h;
    void operator()(const UniformSpec& u) { h.add(u.rank); }
    void operator()(const PartitionSpec& p) {
      for (auto b : p.block_of) h.add(b);
      for (auto c : p.capacity) h.add(c);
    }
    void operator()(const GraphicSpec& g) {
      h.add(g.vertices);
      for (auto [u, w] : g.endpoints) h.add((std::uint64_t{u} << 32U) | w);
    }
    void operator()(const LinearSpec& l) {
      h.add(l.prime);
      for (const auto& col : l.columns)
        for (auto x : col) h.add(x);
    }
    void operator()(const ParallelLiftSpec& p) {
      hash_matroid(h, *p.base);
      for (auto v : p.value_of) h.add(v.id);
    }
  } visitor{h};
  std::visit(visitor, m.spec());
}

}  // namespace detail

/// Stable 64-bit content hash of an instance, as 16 hex digits.
inline std::string instance_digest(const RainbowInstance& inst) {
  detail::Fnv1a h;
  detail::hash_matroid(h, inst.m_oracle);
  detail::hash_matroid(h, inst.n_oracle);
  h.add(inst.n);
  h.add(inst.family.size());
  for (const auto& a : inst.family) h.add(a);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h.value()));
  return buf;
}

/// Runs the solver and the brute-force search on the same instance and
/// compares the rainbow sizes they reach (both capped at n).
inline VerificationReport verify_instance(const RainbowInstance& inst) {
  VerificationReport report;
  report.digest = instance_digest(inst);
  report.n = inst.n;
  report.m = inst.family.size();

  const SolveResult solved = solve(inst);
  report.solver_size = solved.assignment.size();
  report.fallback_used = solved.stats.fallback_used();
  report.solver_m_calls = solved.stats.m_calls;
  report.solver_n_calls = solved.stats.n_calls;

  BruteForceStats bf;
  report.brute_force_size = max_rainbow_size(inst, &bf);
  report.brute_force_m_calls = bf.m_calls;
  report.brute_force_n_calls = bf.n_calls;
  report.agreement = report.solver_size == report.brute_force_size;
  return report;
}

}  // namespace rainbow::lab

#endif  // RAINBOW_LAB_VERIFY_HPP_
