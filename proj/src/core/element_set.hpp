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

#ifndef SECLAB_CORE_ELEMENT_SET_HPP_
#define SECLAB_CORE_ELEMENT_SET_HPP_

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "common.hpp"

namespace seclab {

// A subset of a fixed ground set of n indexed elements, packed into 64-bit
// words. Ground sets of up to 64 elements fit in a single word; larger ones
// (capped at limits::kMaxGroundSize) spill into more words of the same
// inline vector. Element ids are dense indices in [0, n).
class ElementSet {
 public:
  ElementSet() : n_(0) {}

  explicit ElementSet(std::size_t n) : n_(n), words_(word_count(n), 0) {
    if (n > limits::kMaxGroundSize) {
      throw_error(ErrorCode::kInvalidArgument,
                  "ground set size " + std::to_string(n) + " exceeds cap " +
                      std::to_string(limits::kMaxGroundSize));
    }
  }

  ElementSet(std::size_t n, std::initializer_list<std::size_t> elems)
      : ElementSet(n) {
    for (std::size_t e : elems) insert(e);
  }

  static ElementSet full(std::size_t n) {
    ElementSet s(n);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~0ULL;
    s.trim();
    return s;
  }

  // Bit i of mask selects element i; only meaningful for n ≤ 64.
  static ElementSet from_mask(std::size_t n, std::uint64_t mask) {
    assert(n <= 64);
    ElementSet s(n);
    s.words_[0] = mask;
    s.trim();
    return s;
  }

  std::uint64_t to_mask() const {
    assert(n_ <= 64);
    return words_.empty() ? 0 : words_[0];
  }

  std::size_t universe_size() const { return n_; }

  std::size_t size() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w != 0) return false;
    return true;
  }

  bool contains(std::size_t e) const {
    assert(e < n_);
    return (words_[e >> 6] >> (e & 63)) & 1ULL;
  }

  void insert(std::size_t e) {
    assert(e < n_);
    words_[e >> 6] |= 1ULL << (e & 63);
  }

  void erase(std::size_t e) {
    assert(e < n_);
    words_[e >> 6] &= ~(1ULL << (e & 63));
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  ElementSet with(std::size_t e) const {
    ElementSet s = *this;
    s.insert(e);
    return s;
  }

  ElementSet without(std::size_t e) const {
    ElementSet s = *this;
    s.erase(e);
    return s;
  }

  ElementSet& operator|=(const ElementSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  ElementSet& operator&=(const ElementSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  ElementSet& operator-=(const ElementSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  bool operator==(const ElementSet& o) const = default;

  bool is_subset_of(const ElementSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const ElementSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  std::size_t intersection_size(const ElementSet& o) const {
    assert(n_ == o.n_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  // Visits members in increasing index order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        std::size_t b = static_cast<std::size_t>(std::countr_zero(w));
        fn(i * 64 + b);
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t e) { out.push_back(e); });
    return out;
  }

  // Orders sets by their sorted member sequences (a proper prefix sorts
  // first). Used for canonical witnesses and serialization.
  static bool lex_less(const ElementSet& a, const ElementSet& b) {
    assert(a.n_ == b.n_);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff == 0) continue;
      std::size_t e = i * 64 + static_cast<std::size_t>(std::countr_zero(diff));
      // First differing element: whoever owns it compares by whether the
      // other side still has members beyond it (prefix rule).
      if (a.contains(e)) return b.has_member_at_or_above(e);
      return !a.has_member_at_or_above(e);
    }
    return false;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ n_;
    for (std::uint64_t w : words_) {
      h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
      h *= 0xFF51AFD7ED558CCDULL;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

  bool has_member_at_or_above(std::size_t e) const {
    std::size_t wi = e >> 6;
    if ((words_[wi] >> (e & 63)) != 0) return true;
    for (std::size_t i = wi + 1; i < words_.size(); ++i)
      if (words_[i] != 0) return true;
    return false;
  }

  void trim() {
    if (n_ % 64 != 0 && !words_.empty())
      words_.back() &= (1ULL << (n_ % 64)) - 1;
  }

  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

}  // namespace seclab

#endif  // SECLAB_CORE_ELEMENT_SET_HPP_
