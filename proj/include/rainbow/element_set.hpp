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

#ifndef RAINBOW_ELEMENT_SET_HPP_
#define RAINBOW_ELEMENT_SET_HPP_

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <vector>

namespace rainbow {

/// A point of the ground set. Ids are dense: 0 .. ground_size - 1.
struct Element {
  std::uint32_t id = 0;

  constexpr auto operator<=>(const Element&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, Element e) {
  return os << 'e' << e.id;
}

/// Finite set of elements stored as a dynamic bitset. Iteration is in
/// increasing id order, which is what every lowest-id tie-break relies on.
class ElementSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    const_iterator() = default;

    Element operator*() const { return Element{static_cast<std::uint32_t>(pos_)}; }

    const_iterator& operator++() {
      pos_ = set_->next_from(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    friend class ElementSet;
    const_iterator(const ElementSet* set, std::size_t pos) : set_(set), pos_(pos) {}

    const ElementSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  ElementSet() = default;
  ElementSet(std::initializer_list<Element> elements) {
    for (Element e : elements) insert(e);
  }
  explicit ElementSet(const std::vector<Element>& elements) {
    for (Element e : elements) insert(e);
  }

  /// {0, 1, ..., count - 1}
  static ElementSet range(std::size_t count) {
    ElementSet s;
    for (std::size_t i = 0; i < count; ++i) s.insert(Element{static_cast<std::uint32_t>(i)});
    return s;
  }

  bool contains(Element e) const {
    const std::size_t w = e.id / 64;
    return w < words_.size() && ((words_[w] >> (e.id % 64)) & 1U) != 0;
  }

  void insert(Element e) {
    const std::size_t w = e.id / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (e.id % 64);
  }

  void erase(Element e) {
    const std::size_t w = e.id / 64;
    if (w >= words_.size()) return;
    words_[w] &= ~(std::uint64_t{1} << (e.id % 64));
    trim();
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const { return words_.empty(); }

  /// Largest id + 1, or 0 for the empty set.
  std::size_t extent() const {
    if (words_.empty()) return 0;
    return (words_.size() - 1) * 64 + (64 - static_cast<std::size_t>(std::countl_zero(words_.back())));
  }

  const_iterator begin() const { return const_iterator(this, next_from(0)); }
  const_iterator end() const { return const_iterator(this, kEnd); }

  std::vector<Element> to_vector() const { return {begin(), end()}; }

  /// A + x
  ElementSet with(Element e) const {
    ElementSet s = *this;
    s.insert(e);
    return s;
  }
  /// A - x
  ElementSet without(Element e) const {
    ElementSet s = *this;
    s.erase(e);
    return s;
  }

  ElementSet& operator|=(const ElementSet& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& other) {
    if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    trim();
    return *this;
  }
  ElementSet& operator-=(const ElementSet& other) {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
    trim();
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
      if ((words_[i] & ~o) != 0) return false;
    }
    return true;
  }
  bool intersects(const ElementSet& other) const {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  bool operator==(const ElementSet& other) const = default;

  /// Lexicographic on the word representation; only meant for ordered
  /// containers, not as a set-theoretic order.
  bool operator<(const ElementSet& other) const {
    if (words_.size() != other.words_.size()) return words_.size() < other.words_.size();
    for (std::size_t i = words_.size(); i-- > 0;)
      if (words_[i] != other.words_[i]) return words_[i] < other.words_[i];
    return false;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 1099511628211ULL;
    return h;
  }

 private:
  static constexpr std::size_t kEnd = static_cast<std::size_t>(-1);

  std::size_t next_from(std::size_t pos) const {
    std::size_t w = pos / 64;
    if (w >= words_.size()) return kEnd;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (pos % 64));
    while (true) {
      if (bits != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      if (++w >= words_.size()) return kEnd;
      bits = words_[w];
    }
  }

  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  std::vector<std::uint64_t> words_;
};

inline std::ostream& operator<<(std::ostream& os, const ElementSet& s) {
  os << '{';
  bool first = true;
  for (Element e : s) {
    if (!first) os << ',';
    os << e.id;
    first = false;
  }
  return os << '}';
}

}  // namespace rainbow

template <>
struct std::hash<rainbow::ElementSet> {
  std::size_t operator()(const rainbow::ElementSet& s) const noexcept { return s.hash(); }
};

#endif  // RAINBOW_ELEMENT_SET_HPP_
