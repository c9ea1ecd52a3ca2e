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

#include "admg/admg.h"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "mixed_paths.h"

namespace admg {
namespace {

internal::MixedAdjacency Adjacency(const Admg& g) {
  internal::MixedAdjacency adj;
  adj.children.resize(g.size());
  adj.spouses.resize(g.size());
  for (VertexId v = 0; v < g.size(); ++v) {
    adj.children[v] = g.ChildrenOf(v).members();
    adj.spouses[v] = g.SpousesOf(v).members();
  }
  return adj;
}

}  // namespace

bool IsValidVertexName(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

Admg Admg::FromEdges(std::vector<std::string> vertices,
                     const std::vector<NamedEdge>& directed,
                     const std::vector<NamedEdge>& bidirected) {
  for (const auto* edges : {&directed, &bidirected}) {
    for (const auto& [u, v] : *edges) {
      vertices.push_back(u);
      vertices.push_back(v);
    }
  }
  for (const auto& name : vertices) {
    if (!IsValidVertexName(name)) {
      throw GraphError(GraphError::Kind::kInvalidName,
                       "invalid vertex name '" + name + "'");
    }
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());

  Admg g;
  g.names_ = std::move(vertices);
  const std::size_t n = g.names_.size();
  g.parents_.assign(n, VertexSet(n));
  g.children_.assign(n, VertexSet(n));
  g.spouses_.assign(n, VertexSet(n));

  for (const auto& [tail_name, head_name] : directed) {
    const VertexId tail = g.Id(tail_name);
    const VertexId head = g.Id(head_name);
    if (tail == head) {
      throw GraphError(GraphError::Kind::kSelfLoop,
                       "self-loop " + tail_name + " -> " + head_name);
    }
    if (g.parents_[head].contains(tail)) {
      throw GraphError(GraphError::Kind::kDuplicateEdge,
                       "duplicate edge " + tail_name + " -> " + head_name);
    }
    g.parents_[head].insert(tail);
    g.children_[tail].insert(head);
    g.directed_.emplace_back(tail, head);
  }
  for (const auto& [u_name, v_name] : bidirected) {
    const VertexId u = g.Id(u_name);
    const VertexId v = g.Id(v_name);
    if (u == v) {
      throw GraphError(GraphError::Kind::kSelfLoop,
                       "self-loop " + u_name + " <-> " + v_name);
    }
    if (g.spouses_[u].contains(v)) {
      throw GraphError(GraphError::Kind::kDuplicateEdge,
                       "duplicate edge " + u_name + " <-> " + v_name);
    }
    g.spouses_[u].insert(v);
    g.spouses_[v].insert(u);
    g.bidirected_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.directed_.begin(), g.directed_.end());
  std::sort(g.bidirected_.begin(), g.bidirected_.end());

  // Kahn's algorithm, smallest id first.
  std::vector<std::size_t> indegree(n);
  for (VertexId v = 0; v < n; ++v) indegree[v] = g.parents_[v].size();
  std::set<VertexId> ready;
  for (VertexId v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.insert(v);
  }
  while (!ready.empty()) {
    const VertexId v = *ready.begin();
    ready.erase(ready.begin());
    g.topo_.push_back(v);
    for (VertexId w : g.children_[v]) {
      if (--indegree[w] == 0) ready.insert(w);
    }
  }
  if (g.topo_.size() != n) {
    VertexId on_cycle = 0;
    while (indegree[on_cycle] == 0) ++on_cycle;
    throw GraphError(GraphError::Kind::kDirectedCycle,
                     "directed cycle through vertex " + g.names_[on_cycle]);
  }

  g.ancestors_.assign(n, VertexSet(n));
  g.descendants_.assign(n, VertexSet(n));
  for (VertexId v : g.topo_) {
    g.ancestors_[v].insert(v);
    for (VertexId p : g.parents_[v]) g.ancestors_[v] |= g.ancestors_[p];
  }
  for (auto it = g.topo_.rbegin(); it != g.topo_.rend(); ++it) {
    g.descendants_[*it].insert(*it);
    for (VertexId c : g.children_[*it]) {
      g.descendants_[*it] |= g.descendants_[c];
    }
  }
  return g;
}

std::optional<VertexId> Admg::Find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

VertexId Admg::Id(std::string_view name) const {
  if (auto id = Find(name)) return *id;
  throw GraphError(GraphError::Kind::kUnknownVertex,
                   "unknown vertex '" + std::string(name) + "'");
}

VertexSet Admg::Set(std::initializer_list<std::string_view> names) const {
  VertexSet s(size());
  for (std::string_view name : names) s.insert(Id(name));
  return s;
}

VertexSet Admg::SetOf(std::span<const std::string> names) const {
  VertexSet s(size());
  for (const auto& name : names) s.insert(Id(name));
  return s;
}

std::vector<std::string> Admg::Names(const VertexSet& s) const {
  std::vector<std::string> out;
  for (VertexId v : s) out.push_back(names_.at(v));
  return out;
}

std::string Admg::Format(const VertexSet& s) const {
  std::string out = "{";
  bool first = true;
  for (VertexId v : s) {
    if (!first) out += ',';
    out += names_.at(v);
    first = false;
  }
  return out + "}";
}

void Admg::CheckSet(const VertexSet& s) const {
  if (s.universe_size() != size()) {
    throw InputError("vertex set does not belong to this graph");
  }
}

void Admg::CheckVertex(VertexId v) const {
  if (v >= size()) {
    throw InputError("unknown vertex id " + std::to_string(v));
  }
}

namespace {

template <typename Relation>
VertexSet UnionOver(const Admg& g, const VertexSet& s, Relation relation) {
  g.CheckSet(s);
  VertexSet out = g.EmptySet();
  for (VertexId v : s) out |= (g.*relation)(v);
  return out;
}

}  // namespace

VertexSet Parents(const Admg& g, const VertexSet& s) {
  return UnionOver(g, s, &Admg::ParentsOf);
}
VertexSet Children(const Admg& g, const VertexSet& s) {
  return UnionOver(g, s, &Admg::ChildrenOf);
}
VertexSet Spouses(const Admg& g, const VertexSet& s) {
  return UnionOver(g, s, &Admg::SpousesOf);
}
VertexSet Ancestors(const Admg& g, const VertexSet& s) {
  return UnionOver(g, s, &Admg::AncestorsOf);
}
VertexSet Descendants(const Admg& g, const VertexSet& s) {
  return UnionOver(g, s, &Admg::DescendantsOf);
}

VertexSet District(const Admg& g, VertexId x) {
  return District(g, x, g.AllVertices());
}

VertexSet District(const Admg& g, VertexId x, const VertexSet& within) {
  g.CheckVertex(x);
  g.CheckSet(within);
  if (!within.contains(x)) {
    throw InputError("vertex " + g.name(x) + " is outside the subgraph");
  }
  VertexSet seen = g.EmptySet();
  seen.insert(x);
  std::deque<VertexId> queue{x};
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.SpousesOf(v)) {
      if (within.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        queue.push_back(w);
      }
    }
  }
  return seen;
}

std::vector<VertexSet> CComponents(const Admg& g) {
  std::vector<VertexSet> out;
  VertexSet covered = g.EmptySet();
  for (VertexId v = 0; v < g.size(); ++v) {
    if (covered.contains(v)) continue;
    out.push_back(District(g, v));
    covered |= out.back();
  }
  return out;
}

Admg InducedSubgraph(const Admg& g, const VertexSet& a) {
  g.CheckSet(a);
  std::vector<Admg::NamedEdge> directed;
  std::vector<Admg::NamedEdge> bidirected;
  for (const auto& [u, v] : g.directed_edges()) {
    if (a.contains(u) && a.contains(v)) {
      directed.emplace_back(g.name(u), g.name(v));
    }
  }
  for (const auto& [u, v] : g.bidirected_edges()) {
    if (a.contains(u) && a.contains(v)) {
      bidirected.emplace_back(g.name(u), g.name(v));
    }
  }
  return Admg::FromEdges(g.Names(a), directed, bidirected);
}

bool IsAncestral(const Admg& g, const VertexSet& a) {
  return Parents(g, a).IsSubsetOf(a);
}

VertexSet AncestralClosure(const Admg& g, const VertexSet& s) {
  return Ancestors(g, s);
}

bool HasMixedDirectedPath(const Admg& g, VertexId alpha, VertexId beta) {
  g.CheckVertex(alpha);
  g.CheckVertex(beta);
  if (alpha == beta) {
    throw InputError("mixed directed path endpoints must differ");
  }
  return internal::MixedDirectedPathExists(Adjacency(g), alpha, beta);
}

bool HasMixedDirectedCycle(const Admg& g) {
  if (g.bidirected_edges().empty()) return false;
  const internal::MixedAdjacency adj = Adjacency(g);
  // The closing edge beta -> alpha or beta <-> alpha.
  for (const auto& [tail, head] : g.directed_edges()) {
    if (internal::MixedDirectedPathExists(adj, head, tail)) return true;
  }
  for (const auto& [u, v] : g.bidirected_edges()) {
    if (internal::MixedDirectedPathExists(adj, u, v) ||
        internal::MixedDirectedPathExists(adj, v, u)) {
      return true;
    }
  }
  return false;
}

}  // namespace admg
