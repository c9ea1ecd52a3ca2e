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

#include "admg/collapsed_ordering.h"

#include <set>
#include <string>

#include "mixed_paths.h"

namespace admg {
namespace {

enum EdgeKind : unsigned { kOut = 1, kIn = 2, kBi = 4 };

class Contraction {
 public:
  explicit Contraction(const Admg& g)
      : g_(g), block_of_(g.size()), alive_(g.bidirected_edges().size(), 1) {
    for (VertexId v = 0; v < g.size(); ++v) {
      block_of_[v] = v;
      members_.push_back(VertexSet(g.size(), {v}));
    }
  }

  std::size_t block_of(VertexId v) const { return block_of_[v]; }
  const VertexSet& members(std::size_t block) const { return members_[block]; }
  bool alive(std::size_t edge) const { return alive_[edge]; }

  internal::MixedAdjacency Adjacency() const {
    const std::size_t n = g_.size();
    std::vector<std::set<std::size_t>> children(n);
    std::vector<std::set<std::size_t>> spouses(n);
    for (const auto& [tail, head] : g_.directed_edges()) {
      const std::size_t bt = block_of_[tail];
      const std::size_t bh = block_of_[head];
      if (bt == bh) {
        throw InternalError("directed edge " + g_.name(tail) + " -> " +
                            g_.name(head) + " inside a combined block");
      }
      children[bt].insert(bh);
    }
    const auto& bi = g_.bidirected_edges();
    for (std::size_t i = 0; i < bi.size(); ++i) {
      const std::size_t bu = block_of_[bi[i].first];
      const std::size_t bv = block_of_[bi[i].second];
      if (!alive_[i] || bu == bv) continue;
      spouses[bu].insert(bv);
      spouses[bv].insert(bu);
    }
    internal::MixedAdjacency adj;
    for (std::size_t b = 0; b < n; ++b) {
      adj.children.emplace_back(children[b].begin(), children[b].end());
      adj.spouses.emplace_back(spouses[b].begin(), spouses[b].end());
    }
    return adj;
  }

  void RemoveBetween(std::size_t a, std::size_t b) {
    const auto& bi = g_.bidirected_edges();
    for (std::size_t i = 0; i < bi.size(); ++i) {
      const std::size_t bu = block_of_[bi[i].first];
      const std::size_t bv = block_of_[bi[i].second];
      if ((bu == a && bv == b) || (bu == b && bv == a)) alive_[i] = 0;
    }
  }

  // Every third block adjacent to both must be joined to them by edges of
  // one kind; anything else means a mixed directed path between a and b.
  void CheckMergePattern(const internal::MixedAdjacency& adj, std::size_t a,
                         std::size_t b) const {
    const std::size_t n = adj.size();
    std::vector<unsigned> kinds_a(n, 0);
    std::vector<unsigned> kinds_b(n, 0);
    auto collect = [&](std::size_t block, std::vector<unsigned>& kinds) {
      for (std::size_t w : adj.children[block]) kinds[w] |= kOut;
      for (std::size_t w : adj.spouses[block]) kinds[w] |= kBi;
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t w : adj.children[p]) {
          if (w == block) kinds[p] |= kIn;
        }
      }
    };
    collect(a, kinds_a);
    collect(b, kinds_b);
    for (std::size_t c = 0; c < n; ++c) {
      if (c == a || c == b || kinds_a[c] == 0 || kinds_b[c] == 0) continue;
      const unsigned both = kinds_a[c] | kinds_b[c];
      if (both != kOut && both != kIn && both != kBi) {
        throw InternalError("cannot combine " + g_.Format(members_[a]) +
                            " and " + g_.Format(members_[b]) +
                            ": mixed edge pattern with " +
                            g_.Format(members_[c]));
      }
    }
  }

  void Merge(std::size_t into, std::size_t from) {
    for (VertexId w : members_[from]) block_of_[w] = into;
    members_[into] |= members_[from];
    members_[from] = g_.EmptySet();
  }

 private:
  const Admg& g_;
  std::vector<std::size_t> block_of_;
  std::vector<VertexSet> members_;
  std::vector<char> alive_;
};

}  // namespace

CollapsedOrdering BuildCollapsedOrdering(const Admg& g) {
  Contraction contraction(g);
  CollapsedOrdering out;

  const auto& bi = g.bidirected_edges();
  for (std::size_t i = 0; i < bi.size(); ++i) {
    if (!contraction.alive(i)) continue;
    const auto [u, v] = bi[i];
    const std::size_t bu = contraction.block_of(u);
    const std::size_t bv = contraction.block_of(v);
    if (bu == bv) continue;

    const internal::MixedAdjacency adj = contraction.Adjacency();
    CollapseEvent event{CollapseEvent::Kind::kMerge, u, v,
                        contraction.members(bu), contraction.members(bv)};
    if (internal::MixedDirectedPathExists(adj, bu, bv) ||
        internal::MixedDirectedPathExists(adj, bv, bu)) {
      event.kind = CollapseEvent::Kind::kRemove;
      contraction.RemoveBetween(bu, bv);
    } else {
      contraction.CheckMergePattern(adj, bu, bv);
      contraction.Merge(bu, bv);
    }
    out.events.push_back(std::move(event));
  }

  // Kahn's algorithm over the contracted DAG; a block's key is its smallest
  // member, i.e. the lexicographically first name in it.
  const internal::MixedAdjacency dag = contraction.Adjacency();
  const std::size_t n = g.size();
  std::vector<std::size_t> indegree(n, 0);
  std::size_t live_blocks = 0;
  for (std::size_t b = 0; b < n; ++b) {
    if (contraction.members(b).empty()) continue;
    ++live_blocks;
    for (std::size_t c : dag.children[b]) ++indegree[c];
  }
  std::set<std::pair<VertexId, std::size_t>> ready;
  for (std::size_t b = 0; b < n; ++b) {
    if (!contraction.members(b).empty() && indegree[b] == 0) {
      ready.emplace(contraction.members(b).front(), b);
    }
  }
  std::vector<VertexId> sequence;
  while (!ready.empty()) {
    const std::size_t b = ready.begin()->second;
    ready.erase(ready.begin());
    out.blocks.push_back(contraction.members(b));
    for (VertexId v : contraction.members(b)) sequence.push_back(v);
    for (std::size_t c : dag.children[b]) {
      if (--indegree[c] == 0) ready.emplace(contraction.members(c).front(), c);
    }
  }
  if (out.blocks.size() != live_blocks) {
    throw InternalError("collapsed graph has a directed cycle");
  }
  try {
    out.ordering = Ordering::FromIds(g, std::move(sequence));
  } catch (const InputError& e) {
    throw InternalError(std::string("collapsed ordering is inconsistent: ") +
                        e.what());
  }
  return out;
}

}  // namespace admg
