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

#ifndef ADMG_ORDERING_H_
#define ADMG_ORDERING_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "admg/admg.h"

namespace admg {

// A total order on the vertices of a graph that is consistent with it:
// whenever x precedes y, y is not an ancestor of x.
class Ordering {
 public:
  Ordering() = default;

  // Throws InputError unless `sequence` is a permutation of g's vertices and
  // consistent with g.
  static Ordering FromIds(const Admg& g, std::vector<VertexId> sequence);
  static Ordering FromNames(const Admg& g, std::span<const std::string> names);

  const std::vector<VertexId>& sequence() const { return sequence_; }
  std::size_t size() const { return sequence_.size(); }
  std::size_t position(VertexId v) const { return position_.at(v); }
  bool Precedes(VertexId a, VertexId b) const {
    return position_.at(a) < position_.at(b);
  }

  // pre(x): x together with every vertex before it.
  VertexSet Prefix(VertexId x) const;

  std::vector<std::string> Names(const Admg& g) const;

  friend bool operator==(const Ordering& a, const Ordering& b) {
    return a.sequence_ == b.sequence_;
  }

 private:
  std::vector<VertexId> sequence_;
  std::vector<std::size_t> position_;
};

}  // namespace admg

#endif  // ADMG_ORDERING_H_
