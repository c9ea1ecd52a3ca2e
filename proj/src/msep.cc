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

#include "admg/msep.h"

#include <deque>
#include <string>
#include <vector>

namespace admg {
namespace {

void Validate(const Admg& g, const SeparationQuery& q) {
  g.CheckSet(q.x);
  g.CheckSet(q.y);
  g.CheckSet(q.z);
  if (q.x.empty() || q.y.empty()) {
    throw InputError("separation query needs non-empty X and Y");
  }
  if (q.x.Intersects(q.y) || q.x.Intersects(q.z) || q.y.Intersects(q.z)) {
    throw InputError("separation query sets must be pairwise disjoint");
  }
}

// The ADMG with each bi-directed edge replaced by a latent common parent.
// Observed vertices keep their ids; latents follow.
struct LatentDag {
  std::vector<std::vector<std::size_t>> parents;
  std::vector<std::vector<std::size_t>> children;
};

LatentDag Canonicalize(const Admg& g) {
  const std::size_t n = g.size();
  const std::size_t total = n + g.bidirected_edges().size();
  LatentDag dag{std::vector<std::vector<std::size_t>>(total),
                std::vector<std::vector<std::size_t>>(total)};
  for (const auto& [tail, head] : g.directed_edges()) {
    dag.children[tail].push_back(head);
    dag.parents[head].push_back(tail);
  }
  std::size_t latent = n;
  for (const auto& [u, v] : g.bidirected_edges()) {
    for (VertexId w : {u, v}) {
      dag.children[latent].push_back(w);
      dag.parents[w].push_back(latent);
    }
    ++latent;
  }
  return dag;
}

}  // namespace

bool MSeparated(const Admg& g, const SeparationQuery& q) {
  Validate(g, q);
  const LatentDag dag = Canonicalize(g);
  const std::size_t total = dag.parents.size();

  std::vector<char> observed(total, 0);
  for (VertexId v : q.z) observed[v] = 1;

  // Ancestors of Z in the augmented DAG (reflexive).
  std::vector<char> ancestor_of_z(total, 0);
  std::deque<std::size_t> queue(q.z.begin(), q.z.end());
  for (VertexId v : q.z) ancestor_of_z[v] = 1;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t p : dag.parents[v]) {
      if (!ancestor_of_z[p]) {
        ancestor_of_z[p] = 1;
        queue.push_back(p);
      }
    }
  }

  // Ball states: (vertex, arrived from a child) / (vertex, from a parent).
  enum Direction : std::size_t { kUp = 0, kDown = 1 };
  std::vector<char> visited(total * 2, 0);
  std::deque<std::pair<std::size_t, Direction>> balls;
  for (VertexId x : q.x) balls.emplace_back(x, kUp);
  while (!balls.empty()) {
    const auto [v, direction] = balls.front();
    balls.pop_front();
    if (visited[v * 2 + direction]) continue;
    visited[v * 2 + direction] = 1;
    if (!observed[v] && q.y.contains(v) && v < g.size()) return false;

    if (direction == kUp && !observed[v]) {
      for (std::size_t p : dag.parents[v]) balls.emplace_back(p, kUp);
      for (std::size_t c : dag.children[v]) balls.emplace_back(c, kDown);
    } else if (direction == kDown) {
      if (!observed[v]) {
        for (std::size_t c : dag.children[v]) balls.emplace_back(c, kDown);
      }
      if (ancestor_of_z[v]) {
        for (std::size_t p : dag.parents[v]) balls.emplace_back(p, kUp);
      }
    }
  }
  return true;
}

namespace {

struct Step {
  VertexId to;
  bool arrow_at_from;
  bool arrow_at_to;
};

class PathSearch {
 public:
  PathSearch(const Admg& g, const VertexSet& z)
      : g_(g), z_(z), ancestors_of_z_(Ancestors(g, z)),
        on_path_(g.size(), 0) {}

  bool Connected(VertexId source, VertexId target) {
    on_path_.assign(g_.size(), 0);
    on_path_[source] = 1;
    target_ = target;
    return Extend(source, /*arrow_into=*/false, /*is_source=*/true);
  }

 private:
  std::vector<Step> Steps(VertexId v) const {
    std::vector<Step> steps;
    for (VertexId w : g_.ChildrenOf(v)) steps.push_back({w, false, true});
    for (VertexId w : g_.ParentsOf(v)) steps.push_back({w, true, false});
    for (VertexId w : g_.SpousesOf(v)) steps.push_back({w, true, true});
    return steps;
  }

  bool Extend(VertexId v, bool arrow_into, bool is_source) {
    for (const Step& step : Steps(v)) {
      if (!is_source) {
        const bool collider = arrow_into && step.arrow_at_from;
        if (collider && !ancestors_of_z_.contains(v)) continue;
        if (!collider && z_.contains(v)) continue;
      }
      if (step.to == target_) return true;
      if (on_path_[step.to]) continue;
      on_path_[step.to] = 1;
      const bool found = Extend(step.to, step.arrow_at_to, false);
      on_path_[step.to] = 0;
      if (found) return true;
    }
    return false;
  }

  const Admg& g_;
  const VertexSet& z_;
  VertexSet ancestors_of_z_;
  std::vector<char> on_path_;
  VertexId target_ = 0;
};

}  // namespace

bool MSeparatedBruteForce(const Admg& g, const SeparationQuery& q,
                          std::size_t max_vertices) {
  Validate(g, q);
  if (g.size() > max_vertices) {
    throw CapacityError("brute-force m-separation is capped at " +
                        std::to_string(max_vertices) + " vertices (graph has " +
                        std::to_string(g.size()) + ")");
  }
  PathSearch search(g, q.z);
  for (VertexId x : q.x) {
    for (VertexId y : q.y) {
      if (search.Connected(x, y)) return false;
    }
  }
  return true;
}

}  // namespace admg
