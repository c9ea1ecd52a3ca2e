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

#include "admg/vertex_set.h"

#include <algorithm>
#include <functional>

namespace admg {

VertexSet::VertexSet(std::size_t universe_size,
                     std::initializer_list<VertexId> ids)
    : bits_(universe_size) {
  for (VertexId v : ids) bits_.set(v);
}

VertexSet VertexSet::Full(std::size_t universe_size) {
  VertexSet s(universe_size);
  s.bits_.set();
  return s;
}

VertexSet VertexSet::FromMask(std::size_t universe_size, std::uint64_t mask) {
  VertexSet s(universe_size);
  while (mask != 0) {
    const int bit = __builtin_ctzll(mask);
    s.bits_.set(static_cast<std::size_t>(bit));
    mask &= mask - 1;
  }
  return s;
}

bool operator<(const VertexSet& a, const VertexSet& b) {
  auto i = a.bits_.find_first();
  auto j = b.bits_.find_first();
  while (i != VertexSet::Bits::npos && j != VertexSet::Bits::npos) {
    if (i != j) return i < j;
    i = a.bits_.find_next(i);
    j = b.bits_.find_next(j);
  }
  return i == VertexSet::Bits::npos && j != VertexSet::Bits::npos;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  out.reserve(size());
  for (VertexId v : *this) out.push_back(v);
  return out;
}

std::uint64_t VertexSet::ToMask() const {
  std::uint64_t mask = 0;
  for (VertexId v : *this) mask |= std::uint64_t{1} << v;
  return mask;
}

std::size_t VertexSet::Hash() const {
  std::size_t h = std::hash<std::size_t>{}(bits_.size());
  for (VertexId v : *this) h = h * 1000003u ^ std::hash<std::size_t>{}(v);
  return h;
}

}  // namespace admg
