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

#ifndef ADMG_COLLAPSED_ORDERING_H_
#define ADMG_COLLAPSED_ORDERING_H_

#include <vector>

#include "admg/admg.h"
#include "admg/ordering.h"

namespace admg {

// What happened to one bi-directed edge while collapsing.
struct CollapseEvent {
  enum class Kind {
    kMerge,   // endpoints' blocks combined into one
    kRemove,  // a mixed directed path joins the blocks; edge dropped
  };
  Kind kind;
  VertexId u;
  VertexId v;
  VertexSet first_block;   // block of u before the event
  VertexSet second_block;  // block of v before the event
};

struct CollapsedOrdering {
  Ordering ordering;
  // Combined vertex blocks in ordering position.
  std::vector<VertexSet> blocks;
  std::vector<CollapseEvent> events;
};

// Bi-directed edges are visited in lexicographic endpoint order. Blocks
// joined by a mixed directed path (in either direction) lose the edge
// between them; otherwise they merge. An edge whose endpoints already share
// a block produces no event. The resulting contracted graph is a
// DAG, which is sorted topologically (ties broken by smallest member name),
// and each block is expanded in lexicographic order.
//
// For graphs without mixed directed cycles every district ends up in one
// block, so each district is consecutive in the ordering.
//
// Throws InternalError if a merge would combine edges in a pattern other
// than both-out, both-in or both-bi-directed, or if the contracted graph is
// not acyclic.
CollapsedOrdering BuildCollapsedOrdering(const Admg& g);

}  // namespace admg

#endif  // ADMG_COLLAPSED_ORDERING_H_
