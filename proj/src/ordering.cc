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

#include "admg/ordering.h"

namespace admg {

Ordering Ordering::FromIds(const Admg& g, std::vector<VertexId> sequence) {
  if (sequence.size() != g.size()) {
    throw InputError("ordering lists " + std::to_string(sequence.size()) +
                     " vertices but the graph has " +
                     std::to_string(g.size()));
  }
  Ordering ord;
  ord.position_.assign(g.size(), g.size());
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const VertexId v = sequence[i];
    g.CheckVertex(v);
    if (ord.position_[v] != g.size()) {
      throw InputError("ordering repeats vertex " + g.name(v));
    }
    ord.position_[v] = i;
  }
  // Checking every directed edge suffices by transitivity.
  for (const auto& [tail, head] : g.directed_edges()) {
    if (ord.position_[head] < ord.position_[tail]) {
      throw InputError("ordering is inconsistent with the graph: " +
                       g.name(head) + " precedes its ancestor " +
                       g.name(tail));
    }
  }
  ord.sequence_ = std::move(sequence);
  return ord;
}

Ordering Ordering::FromNames(const Admg& g,
                             std::span<const std::string> names) {
  std::vector<VertexId> ids;
  ids.reserve(names.size());
  for (const auto& name : names) ids.push_back(g.Id(name));
  return FromIds(g, std::move(ids));
}

VertexSet Ordering::Prefix(VertexId x) const {
  VertexSet out(sequence_.size());
  const std::size_t end = position_.at(x);
  for (std::size_t i = 0; i <= end; ++i) out.insert(sequence_[i]);
  return out;
}

std::vector<std::string> Ordering::Names(const Admg& g) const {
  std::vector<std::string> out;
  out.reserve(sequence_.size());
  for (VertexId v : sequence_) out.push_back(g.name(v));
  return out;
}

}  // namespace admg
