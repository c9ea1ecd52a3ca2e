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

#ifndef ADMG_SRC_MIXED_PATHS_H_
#define ADMG_SRC_MIXED_PATHS_H_

#include <cstddef>
#include <vector>

namespace admg::internal {

// Adjacency lists of a mixed graph over vertices 0..n-1. Used both for Admg
// queries and for the contracted graphs built while collapsing districts.
struct MixedAdjacency {
  std::vector<std::vector<std::size_t>> children;
  std::vector<std::vector<std::size_t>> spouses;

  std::size_t size() const { return children.size(); }
};

// Vertex-simple path from `from` to `to` whose edges are bi-directed or
// directed towards `to`, containing at least one directed edge.
//
// Every such path is a run of bi-directed edges inside the district of
// `from`, a first directed edge u -> w, and then any edge-form-respecting
// continuation from w that avoids the run. The continuation needs no
// directed edge of its own, so it is a plain reachability question (a walk
// avoiding the run shortcuts to a simple path with the same edge forms).
// Only the bi-directed run is enumerated.
bool MixedDirectedPathExists(const MixedAdjacency& g, std::size_t from,
                             std::size_t to);

}  // namespace admg::internal

#endif  // ADMG_SRC_MIXED_PATHS_H_
