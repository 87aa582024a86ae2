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

#ifndef RAINBOW_SMALL_SET_H_
#define RAINBOW_SMALL_SET_H_

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace rainbow {

// A subset of {0, ..., 63} stored as a 64-bit mask. Used for edge sets of
// geometric graphs, vertex sets of hypergraphs and element sets of matroids.
class SmallSet {
 public:
  static constexpr int kCapacity = 64;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr Iterator() = default;
    constexpr explicit Iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr SmallSet() = default;
  constexpr explicit SmallSet(std::uint64_t bits) : bits_(bits) {}
  constexpr SmallSet(std::initializer_list<int> items) {
    for (int i : items) Insert(i);
  }

  // {0, ..., n - 1}.
  static constexpr SmallSet Prefix(int n) {
    assert(n >= 0 && n <= kCapacity);
    return SmallSet(n == kCapacity ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << n) - 1);
  }
  static constexpr SmallSet Singleton(int i) { return SmallSet({i}); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool Contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr void Insert(int i) {
    assert(i >= 0 && i < kCapacity);
    bits_ |= std::uint64_t{1} << i;
  }
  constexpr void Erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr int Size() const { return std::popcount(bits_); }
  constexpr bool Empty() const { return bits_ == 0; }
  // Smallest element; the set must be non-empty.
  constexpr int Min() const {
    assert(bits_ != 0);
    return std::countr_zero(bits_);
  }
  constexpr bool IsSubsetOf(SmallSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(); }

  std::vector<int> ToVector() const { return std::vector<int>(begin(), end()); }

  constexpr SmallSet& operator|=(SmallSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr SmallSet& operator&=(SmallSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr SmallSet& operator-=(SmallSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr SmallSet operator|(SmallSet a, SmallSet b) { return a |= b; }
  friend constexpr SmallSet operator&(SmallSet a, SmallSet b) { return a &= b; }
  friend constexpr SmallSet operator-(SmallSet a, SmallSet b) { return a -= b; }
  friend constexpr bool operator==(SmallSet, SmallSet) = default;

  // Lexicographic order on the ascending element lists.
  friend constexpr bool LexLess(SmallSet a, SmallSet b) {
    while (!a.Empty() && !b.Empty()) {
      int x = a.Min();
      int y = b.Min();
      if (x != y) return x < y;
      a.Erase(x);
      b.Erase(y);
    }
    return a.Empty() && !b.Empty();
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace rainbow

#endif  // RAINBOW_SMALL_SET_H_
