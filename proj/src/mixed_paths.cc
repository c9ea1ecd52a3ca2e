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

#include "mixed_paths.h"

#include <deque>

namespace admg::internal {
namespace {

// Reachability from `start` to `target` along bi-directed edges and forward
// directed edges, never entering a blocked vertex.
bool ReachableAvoiding(const MixedAdjacency& g, std::size_t start,
                       std::size_t target, const std::vector<char>& blocked) {
  if (start == target) return true;
  std::vector<char> seen(g.size(), 0);
  std::deque<std::size_t> queue{start};
  seen[start] = 1;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (const auto* next : {&g.children[v], &g.spouses[v]}) {
      for (std::size_t w : *next) {
        if (w == target) return true;
        if (seen[w] || blocked[w]) continue;
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return false;
}

// Walk-level reachability ignoring vertex repetition; a necessary condition.
bool WalkExists(const MixedAdjacency& g, std::size_t from, std::size_t to) {
  // state = vertex * 2 + (directed edge used)
  std::vector<char> seen(g.size() * 2, 0);
  std::deque<std::size_t> queue{from * 2};
  seen[from * 2] = 1;
  while (!queue.empty()) {
    const std::size_t state = queue.front();
    queue.pop_front();
    const std::size_t v = state / 2;
    const std::size_t used = state % 2;
    if (v == to && used) return true;
    if (v == to) continue;
    auto visit = [&](std::size_t w, std::size_t u) {
      const std::size_t s = w * 2 + u;
      if (!seen[s]) {
        seen[s] = 1;
        queue.push_back(s);
      }
    };
    for (std::size_t w : g.children[v]) visit(w, 1);
    for (std::size_t w : g.spouses[v]) visit(w, used);
  }
  return false;
}

bool ExtendBidirectedRun(const MixedAdjacency& g, std::size_t v,
                         std::size_t to, std::vector<char>& on_run) {
  for (std::size_t w : g.children[v]) {
    if (w == to) return true;
    if (!on_run[w] && ReachableAvoiding(g, w, to, on_run)) return true;
  }
  for (std::size_t w : g.spouses[v]) {
    if (w == to || on_run[w]) continue;
    on_run[w] = 1;
    const bool found = ExtendBidirectedRun(g, w, to, on_run);
    on_run[w] = 0;
    if (found) return true;
  }
  return false;
}

}  // namespace

bool MixedDirectedPathExists(const MixedAdjacency& g, std::size_t from,
                             std::size_t to) {
  if (from == to || !WalkExists(g, from, to)) return false;
  std::vector<char> on_run(g.size(), 0);
  on_run[from] = 1;
  return ExtendBidirectedRun(g, from, to, on_run);
}

}  // namespace admg::internal
