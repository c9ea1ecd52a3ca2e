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

#ifndef ADMG_MSEP_H_
#define ADMG_MSEP_H_

#include <cstddef>

#include "admg/admg.h"

namespace admg {

// Is X m-separated from Y given Z? X and Y must be non-empty and the three
// sets pairwise disjoint.
struct SeparationQuery {
  VertexSet x;
  VertexSet y;
  VertexSet z;
};

// Replaces every bi-directed edge u <-> v by a latent parent of u and v and
// runs a Bayes-ball reachability pass over the resulting DAG, never
// conditioning on latents. Linear in the size of the augmented graph.
bool MSeparated(const Admg& g, const SeparationQuery& q);

inline constexpr std::size_t kDefaultBruteForceCap = 10;

// Reference implementation: enumerates every vertex-simple path between each
// x in X and y in Y and applies the collider / non-collider conditions
// literally. Throws CapacityError for graphs with more than `max_vertices`.
bool MSeparatedBruteForce(const Admg& g, const SeparationQuery& q,
                          std::size_t max_vertices = kDefaultBruteForceCap);

}  // namespace admg

#endif  // ADMG_MSEP_H_
