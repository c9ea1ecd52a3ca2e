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

#ifndef ADMG_ADMG_H_
#define ADMG_ADMG_H_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "admg/errors.h"
#include "admg/vertex_set.h"

namespace admg {

// Raised when an edge list does not describe a valid acyclic directed mixed
// graph.
class GraphError : public InputError {
 public:
  enum class Kind {
    kInvalidName,
    kUnknownVertex,
    kSelfLoop,
    kDuplicateEdge,
    kDirectedCycle,
  };

  GraphError(Kind kind, const std::string& message)
      : InputError(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// An acyclic directed mixed graph: directed edges whose directed part is
// acyclic, plus bi-directed edges. Immutable after construction. A pair of
// vertices may carry both a directed and a bi-directed edge.
class Admg {
 public:
  using NamedEdge = std::pair<std::string, std::string>;
  // (tail, head) for directed edges; (smaller id, larger id) for bi-directed.
  using Edge = std::pair<VertexId, VertexId>;

  Admg() = default;

  // Vertices named only by edges are added implicitly. Throws GraphError on
  // invalid names, self-loops, duplicate edges or a directed cycle.
  static Admg FromEdges(std::vector<std::string> vertices,
                        const std::vector<NamedEdge>& directed,
                        const std::vector<NamedEdge>& bidirected);

  std::size_t size() const { return names_.size(); }
  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<VertexId> Find(std::string_view name) const;
  // Throws InputError for unknown names.
  VertexId Id(std::string_view name) const;

  VertexSet EmptySet() const { return VertexSet(size()); }
  VertexSet AllVertices() const { return VertexSet::Full(size()); }
  VertexSet Set(std::initializer_list<std::string_view> names) const;
  VertexSet SetOf(std::span<const std::string> names) const;

  const VertexSet& ParentsOf(VertexId v) const { return parents_.at(v); }
  const VertexSet& ChildrenOf(VertexId v) const { return children_.at(v); }
  const VertexSet& SpousesOf(VertexId v) const { return spouses_.at(v); }
  const VertexSet& AncestorsOf(VertexId v) const { return ancestors_.at(v); }
  const VertexSet& DescendantsOf(VertexId v) const {
    return descendants_.at(v);
  }

  bool HasDirectedEdge(VertexId tail, VertexId head) const {
    return parents_.at(head).contains(tail);
  }
  bool HasBidirectedEdge(VertexId u, VertexId v) const {
    return spouses_.at(u).contains(v);
  }

  // Sorted lexicographically.
  const std::vector<Edge>& directed_edges() const { return directed_; }
  const std::vector<Edge>& bidirected_edges() const { return bidirected_; }

  // A topological order of the directed part, smallest name first among ties.
  const std::vector<VertexId>& topological_order() const { return topo_; }

  std::vector<std::string> Names(const VertexSet& s) const;
  // "{a,b,c}" in canonical order.
  std::string Format(const VertexSet& s) const;

  // Throws InputError unless s belongs to this graph.
  void CheckSet(const VertexSet& s) const;
  void CheckVertex(VertexId v) const;

  friend bool operator==(const Admg& a, const Admg& b) {
    return a.names_ == b.names_ && a.directed_ == b.directed_ &&
           a.bidirected_ == b.bidirected_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> directed_;
  std::vector<Edge> bidirected_;
  std::vector<VertexSet> parents_;
  std::vector<VertexSet> children_;
  std::vector<VertexSet> spouses_;
  std::vector<VertexSet> ancestors_;
  std::vector<VertexSet> descendants_;
  std::vector<VertexId> topo_;
};

bool IsValidVertexName(std::string_view name);

// Structural relations. Every set argument must belong to g; set-valued
// functions apply the per-vertex relation to each member and take the union.
VertexSet Parents(const Admg& g, const VertexSet& s);
VertexSet Children(const Admg& g, const VertexSet& s);
VertexSet Spouses(const Admg& g, const VertexSet& s);
// Reflexive: s is contained in the result. Bi-directed edges are ignored.
VertexSet Ancestors(const Admg& g, const VertexSet& s);
VertexSet Descendants(const Admg& g, const VertexSet& s);

// The c-component of x.
VertexSet District(const Admg& g, VertexId x);
// The c-component of x in the induced subgraph on `within` (x must belong to
// `within`).
VertexSet District(const Admg& g, VertexId x, const VertexSet& within);
// Partition of the vertices into districts, ordered by smallest member.
std::vector<VertexSet> CComponents(const Admg& g);

// G_A: both edge sets restricted to endpoints in a. Vertex names carry over.
Admg InducedSubgraph(const Admg& g, const VertexSet& a);

bool IsAncestral(const Admg& g, const VertexSet& a);
VertexSet AncestralClosure(const Admg& g, const VertexSet& s);

// True iff some path from alpha to beta uses only bi-directed edges and
// directed edges pointing towards beta, with at least one directed edge.
bool HasMixedDirectedPath(const Admg& g, VertexId alpha, VertexId beta);
bool HasMixedDirectedCycle(const Admg& g);

}  // namespace admg

#endif  // ADMG_ADMG_H_
