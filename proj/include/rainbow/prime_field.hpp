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

#ifndef RAINBOW_PRIME_FIELD_HPP_
#define RAINBOW_PRIME_FIELD_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rainbow::gf {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

// Fermat inverse; `a` must be nonzero mod p.
inline std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

/// Rank over GF(p) of the given column vectors, by Gaussian elimination.
/// Entries must already be reduced mod p and p < 2^32.
inline std::size_t column_rank(std::vector<std::vector<std::uint32_t>> columns, std::uint64_t p) {
  if (columns.empty()) return 0;
  const std::size_t rows = columns.front().size();
  std::size_t rank = 0;
  // Eliminate on the transposed view: each column is treated as a row vector.
  for (std::size_t r = 0; r < rows && rank < columns.size(); ++r) {
    std::size_t pivot = rank;
    while (pivot < columns.size() && columns[pivot][r] == 0) ++pivot;
    if (pivot == columns.size()) continue;
    std::swap(columns[rank], columns[pivot]);
    const std::uint64_t inv = inverse(columns[rank][r], p);
    for (std::size_t c = rank + 1; c < columns.size(); ++c) {
      if (columns[c][r] == 0) continue;
      const std::uint64_t factor = columns[c][r] * inv % p;
      for (std::size_t k = r; k < rows; ++k) {
        const std::uint64_t sub = factor * columns[rank][k] % p;
        columns[c][k] = static_cast<std::uint32_t>((columns[c][k] + p - sub) % p);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace rainbow::gf

#endif  // RAINBOW_PRIME_FIELD_HPP_
