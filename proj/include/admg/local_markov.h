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

#ifndef ADMG_LOCAL_MARKOV_H_
#define ADMG_LOCAL_MARKOV_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "admg/admg.h"
#include "admg/ci_statement.h"
#include "admg/ordering.h"

namespace admg {

// Upper bound on |pre(x) \ an(x)|, the number of free vertices whose subsets
// are enumerated when listing maximal ancestral sets.
inline constexpr std::size_t kDefaultEnumerationCap = 22;

// mb(x, A): parents of x's district in G_A together with that district,
// minus x. Requires A ancestral, x in A and x childless in A.
VertexSet MarkovBlanket(const Admg& g, VertexId x, const VertexSet& a);

// Every ancestral A with x in A within pre(x) that is maximal for its Markov
// blanket: no strictly larger ancestral set inside pre(x) has the same
// blanket. Sorted by descending size, then lexicographically; the first
// entry is always pre(x) itself.
//
// Brute force over subsets of pre(x) \ an(x); throws CapacityError past
// `cap` free vertices or for graphs with more than 64 vertices.
std::vector<VertexSet> MaximalAncestralSets(
    const Admg& g, VertexId x, const Ordering& ord,
    std::size_t cap = kDefaultEnumerationCap);

// I({x}, mb(x, A), A \ (mb(x, A) u {x})), or nullopt when the independent
// side is empty.
std::optional<CiStatement> LocalStatement(const Admg& g, VertexId x,
                                          const VertexSet& a);

// One statement per (vertex, maximal ancestral set), vacuous ones dropped.
std::vector<CiStatement> OrderedLocalMarkov(const Admg& g, const Ordering& ord);

// f(x, G) = pa(x) u de({x} u sp(x)).
VertexSet ReducedScope(const Admg& g, VertexId x);

// I({x}, pa(x), V \ f(x, G)), or nullopt when V \ f(x, G) is empty.
std::optional<CiStatement> ReducedStatement(const Admg& g, VertexId x);

// The one-statement-per-vertex property. Sufficient under composition only
// when g has no mixed directed cycle; throws PreconditionError otherwise.
// Duplicates (after symmetry) and vacuous statements are dropped.
std::vector<CiStatement> ReducedLocalMarkov(const Admg& g);

// True when the vertices of dis(x) within pre(x) are consecutive in `ord`
// and no directed edge joins two of them. The reduced statements of those
// vertices then imply every ordered local statement for x.
bool ReducedFormSuffices(const Admg& g, VertexId x, const Ordering& ord);

// Whether the local statement for A = pre(x) implies the one for a smaller
// maximal ancestral set A'. Intermediate sets are exposed for auditing.
struct PrefixImplication {
  VertexSet y;        // dis_{G_A}(x) \ dis_{G_A'}(x)
  VertexSet y1;       // dis_{G_A}(x) \ A'
  VertexSet y2;       // y \ y1
  VertexSet parents;  // pa(y)
  VertexSet blanket;  // mb(x, A')
  bool implied = false;
};

// Throws InputError unless A' is ancestral, contains x, lies inside pre(x)
// and cannot be grown by one vertex (plus its ancestors) without changing
// its blanket.
PrefixImplication CheckPrefixImplication(const Admg& g, VertexId x,
                                         const Ordering& ord,
                                         const VertexSet& a_prime);
bool ImpliedByPrefixStatement(const Admg& g, VertexId x, const Ordering& ord,
                              const VertexSet& a_prime);

enum class Provenance {
  kReducedForm,   // I({x}, pa(x), V \ f(x, G))
  kOrderedLocal,  // I({x}, mb(x, A), A \ (mb(x, A) u {x}))
  kPruned,        // ordered local statement implied by the pre(x) statement
};

const char* ProvenanceName(Provenance p);

struct BasisEntry {
  CiStatement statement;
  VertexId vertex;
  Provenance provenance;
  // The ancestral set behind an ordered local statement.
  std::optional<VertexSet> ancestral_set;
  // For pruned statements: index into ReducedBasis::statements of the
  // statement that implies it (absent if that one was vacuous).
  std::optional<std::size_t> implied_by;
};

// A local statement whose independent side came out empty. Kept so counts
// can include it; it never enters a statement list.
struct VacuousEntry {
  VertexId vertex;
  VertexSet given;
  Provenance provenance;
};

struct ReducedBasis {
  Ordering ordering;
  std::vector<BasisEntry> statements;
  std::vector<BasisEntry> pruned;
  std::vector<VacuousEntry> vacuous;
  std::size_t duplicates_dropped = 0;

  std::vector<CiStatement> Statements() const;
  // Statements the local property invokes, counting vacuous ones.
  std::size_t InvokedCount() const { return statements.size() + vacuous.size(); }
};

// The ordered local property under `ord`, with provenance.
ReducedBasis OrderedLocalBasis(const Admg& g, const Ordering& ord,
                               std::size_t cap = kDefaultEnumerationCap);

// ReducedLocalMarkov with provenance; the ordering is the collapsed one.
ReducedBasis ReducedLocalBasis(const Admg& g);

// The full reduction for an arbitrary ADMG: build the collapsed ordering,
// then scan it, emitting the reduced statement where it suffices and the
// pruned ordered local statements elsewhere.
ReducedBasis ReduceLocalMarkov(const Admg& g,
                               std::size_t cap = kDefaultEnumerationCap);
// The scan alone, under a caller-supplied consistent ordering.
ReducedBasis ReduceLocalMarkov(const Admg& g, const Ordering& ord,
                               std::size_t cap = kDefaultEnumerationCap);

}  // namespace admg

#endif  // ADMG_LOCAL_MARKOV_H_
