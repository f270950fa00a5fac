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

// Matroid machinery expressed purely in terms of an independence predicate.
// Any type modelling IndependenceOracle gets rank, span, fundamental circuits,
// augmentation and circuit elimination for free.

#ifndef RAINBOW_OPERATIONS_HPP_
#define RAINBOW_OPERATIONS_HPP_

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>

#include "rainbow/element_set.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

template <class O>
concept IndependenceOracle = requires(const O& o, const ElementSet& s) {
  { o.ground_size() } -> std::convertible_to<std::size_t>;
  { o.is_independent(s) } -> std::same_as<bool>;
};

/// Wraps an oracle and counts is_independent calls. The counter is owned by
/// the caller so the wrapped oracle itself stays immutable and shareable.
template <IndependenceOracle O>
class CountingOracle {
 public:
  CountingOracle(const O& inner, std::uint64_t& calls) : inner_(&inner), calls_(&calls) {}

  std::size_t ground_size() const { return inner_->ground_size(); }
  bool is_independent(const ElementSet& s) const {
    ++*calls_;
    return inner_->is_independent(s);
  }
  const O& inner() const { return *inner_; }

 private:
  const O* inner_;
  std::uint64_t* calls_;
};

/// Whether the optional Fact-level postconditions are re-verified at runtime.
enum class Checks { off, on };

namespace detail {

inline void require(bool ok, const char* op, const std::string& what) {
  if (!ok) throw PreconditionError(std::string(op) + ": " + what);
}

template <IndependenceOracle O>
void require_in_ground(const O& m, const ElementSet& s, const char* op) {
  if (s.extent() > m.ground_size())
    throw RangeError(std::string(op) + ": element id " + std::to_string(s.extent() - 1) +
                     " outside ground set of size " + std::to_string(m.ground_size()));
}

}  // namespace detail

template <IndependenceOracle O>
bool is_independent(const O& m, const ElementSet& s) {
  return m.is_independent(s);
}

/// Greedy maximal independent subset of s, scanning ids upward. Every maximal
/// independent subset is maximum, so its size is the rank.
template <IndependenceOracle O>
ElementSet greedy_basis(const O& m, const ElementSet& s) {
  detail::require_in_ground(m, s, "greedy_basis");
  ElementSet basis;
  for (Element e : s) {
    ElementSet trial = basis.with(e);
    if (m.is_independent(trial)) basis = std::move(trial);
  }
  return basis;
}

template <IndependenceOracle O>
std::size_t rank(const O& m, const ElementSet& s) {
  return greedy_basis(m, s).size();
}

/// x in span(a): x in a, or x is dependent on a maximal independent subset of a.
template <IndependenceOracle O>
bool in_span(const O& m, const ElementSet& a, Element x) {
  if (a.contains(x)) return true;
  return !m.is_independent(greedy_basis(m, a).with(x));
}

template <IndependenceOracle O>
ElementSet span(const O& m, const ElementSet& a) {
  detail::require_in_ground(m, a, "span");
  const ElementSet basis = greedy_basis(m, a);
  ElementSet closure = a;
  for (std::uint32_t id = 0; id < m.ground_size(); ++id) {
    const Element x{id};
    if (!closure.contains(x) && !m.is_independent(basis.with(x))) closure.insert(x);
  }
  return closure;
}

template <IndependenceOracle O>
bool is_circuit(const O& m, const ElementSet& s) {
  detail::require_in_ground(m, s, "is_circuit");
  if (m.is_independent(s)) return false;
  for (Element y : s)
    if (!m.is_independent(s.without(y))) return false;
  return true;
}

/// C(i, x): the unique minimal subset of independent i spanning x, for x not in
/// i with i + x dependent. Equals {a in i : i + x - a independent}.
template <IndependenceOracle O>
ElementSet fundamental_circuit(const O& m, const ElementSet& i, Element x, Checks checks = Checks::off) {
  constexpr const char* op = "fundamental_circuit";
  detail::require_in_ground(m, i.with(x), op);
  detail::require(!i.contains(x), op, "x must not belong to i");
  detail::require(m.is_independent(i), op, "i is dependent");
  const ElementSet grown = i.with(x);
  detail::require(!m.is_independent(grown), op, "i + x is independent, so no circuit exists");

  ElementSet circuit;
  for (Element a : i)
    if (m.is_independent(grown.without(a))) circuit.insert(a);

  if (checks == Checks::on) {
    const ElementSet base_span = span(m, i);
    for (Element a : circuit) {
      if (span(m, grown.without(a)) != base_span)
        throw GuaranteeViolation("fundamental_circuit: exchange changed the span");
    }
    if (!is_circuit(m, circuit.with(x))) throw GuaranteeViolation("fundamental_circuit: result + x is not a circuit");
  }
  return circuit;
}

/// J1 subset of j \ i with i | J1 independent and |J1| >= |j| - |i|, grown one
/// element at a time, lowest id first, until no element of j can be added.
template <IndependenceOracle O>
ElementSet augment_from(const O& m, const ElementSet& i, const ElementSet& j) {
  constexpr const char* op = "augment_from";
  detail::require_in_ground(m, i | j, op);
  detail::require(m.is_independent(i), op, "i is dependent");
  detail::require(m.is_independent(j), op, "j is dependent");
  detail::require(i.size() < j.size(), op, "requires |i| < |j|");

  ElementSet current = i;
  ElementSet added;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Element x : j - current) {
      ElementSet trial = current.with(x);
      if (m.is_independent(trial)) {
        current = std::move(trial);
        added.insert(x);
        grew = true;
        break;
      }
    }
  }
  if (added.size() + i.size() < j.size())
    throw GuaranteeViolation("augment_from: oracle violates the augmentation property");
  return added;
}

/// Circuit elimination: a circuit C3 with f in C3 and C3 inside (c1 | c2) - e.
/// Shrinks (c1 | c2) - e, dropping y whenever f stays spanned by the rest.
/// One pass suffices: f in span(T - f) is monotone in T, so an element that
/// was needed once stays needed.
template <IndependenceOracle O>
ElementSet eliminate_circuit(const O& m, const ElementSet& c1, const ElementSet& c2, Element e, Element f) {
  constexpr const char* op = "eliminate_circuit";
  detail::require_in_ground(m, c1 | c2, op);
  detail::require(is_circuit(m, c1), op, "c1 is not a circuit");
  detail::require(is_circuit(m, c2), op, "c2 is not a circuit");
  detail::require(c1.contains(e) && c2.contains(e), op, "e must lie in c1 and c2");
  detail::require(c1.contains(f) && !c2.contains(f), op, "f must lie in c1 but not c2");

  ElementSet pool = (c1 | c2).without(e);
  for (Element y : pool.without(f)) {
    const ElementSet rest = pool.without(y).without(f);
    if (in_span(m, rest, f)) pool.erase(y);
  }
  if (!is_circuit(m, pool)) throw GuaranteeViolation("eliminate_circuit: oracle violates circuit elimination");
  return pool;
}

}  // namespace rainbow

#endif  // RAINBOW_OPERATIONS_HPP_
