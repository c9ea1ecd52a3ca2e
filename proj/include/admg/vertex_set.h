// Copyright 2026 The admg-local Authors
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

#ifndef ADMG_VERTEX_SET_H_
#define ADMG_VERTEX_SET_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace admg {

// Vertices are identified by their index in the owning graph. Graphs keep
// their vertices sorted by name, so index order is lexicographic name order.
using VertexId = std::size_t;

// A subset of the vertices of one graph. Iteration visits members in
// increasing id order, which is the canonical (lexicographic) order.
class VertexSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexId*;
    using reference = VertexId;

    Iterator() = default;
    Iterator(const Bits* bits, std::size_t pos) : bits_(bits), pos_(pos) {}

    VertexId operator*() const { return pos_; }
    Iterator& operator++() {
      pos_ = bits_->find_next(pos_);
      return *this;
    }
    Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const Iterator& a, const Iterator& b) {
      return a.pos_ == b.pos_;
    }

   private:
    const Bits* bits_ = nullptr;
    std::size_t pos_ = Bits::npos;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe_size) : bits_(universe_size) {}
  VertexSet(std::size_t universe_size, std::initializer_list<VertexId> ids);

  static VertexSet Full(std::size_t universe_size);
  // Requires universe_size <= 64.
  static VertexSet FromMask(std::size_t universe_size, std::uint64_t mask);

  std::size_t universe_size() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(VertexId v) const { return v < bits_.size() && bits_.test(v); }

  void insert(VertexId v) { bits_.set(v); }
  void erase(VertexId v) { bits_.reset(v); }

  bool IsSubsetOf(const VertexSet& other) const {
    return bits_.is_subset_of(other.bits_);
  }
  bool Intersects(const VertexSet& other) const {
    return bits_.intersects(other.bits_);
  }

  VertexSet& operator|=(const VertexSet& other) {
    bits_ |= other.bits_;
    return *this;
  }
  VertexSet& operator&=(const VertexSet& other) {
    bits_ &= other.bits_;
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& other) {
    bits_ -= other.bits_;
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.bits_ == b.bits_;
  }
  // Lexicographic comparison of the sorted member sequences.
  friend bool operator<(const VertexSet& a, const VertexSet& b);

  Iterator begin() const { return Iterator(&bits_, bits_.find_first()); }
  Iterator end() const { return Iterator(&bits_, Bits::npos); }

  VertexId front() const { return bits_.find_first(); }
  std::vector<VertexId> members() const;
  // Requires universe_size() <= 64.
  std::uint64_t ToMask() const;
  std::size_t Hash() const;

 private:
  Bits bits_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.Hash(); }
};

}  // namespace admg

#endif  // ADMG_VERTEX_SET_H_
