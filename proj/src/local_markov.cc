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

#include "admg/local_markov.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "admg/collapsed_ordering.h"

namespace admg {
namespace {

using Mask = std::uint64_t;

Mask Bit(VertexId v) { return Mask{1} << v; }

// Bitmask views of the graph for the subset enumeration.
struct MaskGraph {
  std::vector<Mask> parents;
  std::vector<Mask> spouses;

  explicit MaskGraph(const Admg& g) {
    for (VertexId v = 0; v < g.size(); ++v) {
      parents.push_back(g.ParentsOf(v).ToMask());
      spouses.push_back(g.SpousesOf(v).ToMask());
    }
  }

  Mask District(VertexId x, Mask within) const {
    Mask seen = Bit(x);
    Mask frontier = seen;
    while (frontier != 0) {
      const VertexId v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const Mask fresh = spouses[v] & within & ~seen;
      seen |= fresh;
      frontier |= fresh;
    }
    return seen;
  }

  Mask Blanket(VertexId x, Mask ancestral) const {
    const Mask district = District(x, ancestral);
    Mask out = district;
    for (Mask m = district; m != 0; m &= m - 1) {
      out |= parents[std::countr_zero(m)];
    }
    return out & ancestral & ~Bit(x);
  }
};

void CheckMaskCapacity(const Admg& g) {
  if (g.size() > 64) {
    throw CapacityError("ancestral set enumeration supports at most 64 "
                        "vertices (graph has " +
                        std::to_string(g.size()) + ")");
  }
}

}  // namespace

VertexSet MarkovBlanket(const Admg& g, VertexId x, const VertexSet& a) {
  g.CheckVertex(x);
  g.CheckSet(a);
  if (!a.contains(x)) {
    throw InputError("vertex " + g.name(x) + " is not in " + g.Format(a));
  }
  if (!IsAncestral(g, a)) {
    throw InputError(g.Format(a) + " is not ancestral");
  }
  if (g.ChildrenOf(x).Intersects(a)) {
    throw InputError("vertex " + g.name(x) + " has a child in " +
                     g.Format(a));
  }
  const VertexSet district = District(g, x, a);
  VertexSet out = (Parents(g, district) & a) | district;
  out.erase(x);
  return out;
}

std::vector<VertexSet> MaximalAncestralSets(const Admg& g, VertexId x,
                                            const Ordering& ord,
                                            std::size_t cap) {
  g.CheckVertex(x);
  if (ord.size() != g.size()) {
    throw InputError("ordering does not belong to this graph");
  }
  CheckMaskCapacity(g);
  const MaskGraph masks(g);
  const Mask prefix = ord.Prefix(x).ToMask();
  const Mask base = g.AncestorsOf(x).ToMask();
  if ((base & ~prefix) != 0) {
    throw InputError("ordering places an ancestor of " + g.name(x) +
                     " after it");
  }
  const Mask free = prefix & ~base;
  if (static_cast<std::size_t>(std::popcount(free)) > cap) {
    throw CapacityError(
        "vertex " + g.name(x) + " has " + std::to_string(std::popcount(free)) +
        " candidate vertices for ancestral sets; cap is " +
        std::to_string(cap));
  }

  // Blanket -> antichain of the largest ancestral sets realising it.
  std::unordered_map<Mask, std::vector<Mask>> buckets;
  Mask extra = 0;
  while (true) {
    const Mask a = base | extra;
    bool ancestral = true;
    for (Mask m = extra; m != 0 && ancestral; m &= m - 1) {
      ancestral = (masks.parents[std::countr_zero(m)] & ~a) == 0;
    }
    if (ancestral) {
      auto& sets = buckets[masks.Blanket(x, a)];
      const bool dominated = std::any_of(sets.begin(), sets.end(), [&](Mask s) {
        return (a & ~s) == 0;
      });
      if (!dominated) {
        std::erase_if(sets, [&](Mask s) { return (s & ~a) == 0; });
        sets.push_back(a);
      }
    }
    if (extra == free) break;
    extra = (extra - free) & free;  // next subset of `free`
  }

  std::vector<VertexSet> out;
  for (const auto& [blanket, sets] : buckets) {
    for (Mask a : sets) out.push_back(VertexSet::FromMask(g.size(), a));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return out;
}

std::optional<CiStatement> LocalStatement(const Admg& g, VertexId x,
                                          const VertexSet& a) {
  const VertexSet blanket = MarkovBlanket(g, x, a);
  VertexSet rest = a - blanket;
  rest.erase(x);
  if (rest.empty()) return std::nullopt;
  return CiStatement(VertexSet(g.size(), {x}), blanket, rest);
}

std::vector<CiStatement> OrderedLocalMarkov(const Admg& g,
                                            const Ordering& ord) {
  return OrderedLocalBasis(g, ord).Statements();
}

VertexSet ReducedScope(const Admg& g, VertexId x) {
  g.CheckVertex(x);
  VertexSet roots = g.SpousesOf(x);
  roots.insert(x);
  return g.ParentsOf(x) | Descendants(g, roots);
}

std::optional<CiStatement> ReducedStatement(const Admg& g, VertexId x) {
  const VertexSet rest = g.AllVertices() - ReducedScope(g, x);
  if (rest.empty()) return std::nullopt;
  return CiStatement(VertexSet(g.size(), {x}), g.ParentsOf(x), rest);
}

std::vector<CiStatement> ReducedLocalMarkov(const Admg& g) {
  return ReducedLocalBasis(g).Statements();
}

bool ReducedFormSuffices(const Admg& g, VertexId x, const Ordering& ord) {
  g.CheckVertex(x);
  const VertexSet block = District(g, x) & ord.Prefix(x);
  std::size_t first = ord.size();
  std::size_t last = 0;
  for (VertexId v : block) {
    first = std::min(first, ord.position(v));
    last = std::max(last, ord.position(v));
  }
  if (last - first + 1 != block.size()) return false;
  for (VertexId v : block) {
    if (g.ChildrenOf(v).Intersects(block)) return false;
  }
  return true;
}

PrefixImplication CheckPrefixImplication(const Admg& g, VertexId x,
                                         const Ordering& ord,
                                         const VertexSet& a_prime) {
  g.CheckVertex(x);
  g.CheckSet(a_prime);
  const VertexSet prefix = ord.Prefix(x);
  if (!a_prime.contains(x) || !a_prime.IsSubsetOf(prefix)) {
    throw InputError(g.Format(a_prime) + " must contain " + g.name(x) +
                     " and lie inside pre(" + g.name(x) + ")");
  }
  PrefixImplication out;
  out.blanket = MarkovBlanket(g, x, a_prime);  // checks ancestrality
  for (VertexId v : prefix - a_prime) {
    VertexSet grown = a_prime;
    grown.insert(v);
    grown = AncestralClosure(g, grown);
    if (MarkovBlanket(g, x, grown) == out.blanket) {
      throw InputError(g.Format(a_prime) + " is not maximal for its blanket " +
                       g.Format(out.blanket));
    }
  }
  const VertexSet district = District(g, x, prefix);
  out.y = district - District(g, x, a_prime);
  out.y1 = district - a_prime;
  out.y2 = out.y - out.y1;
  out.parents = Parents(g, out.y);
  out.implied = out.y2.empty() && out.parents.IsSubsetOf(out.blanket);
  return out;
}

bool ImpliedByPrefixStatement(const Admg& g, VertexId x, const Ordering& ord,
                              const VertexSet& a_prime) {
  return CheckPrefixImplication(g, x, ord, a_prime).implied;
}

const char* ProvenanceName(Provenance p) {
  switch (p) {
    case Provenance::kReducedForm:
      return "reduced-form";
    case Provenance::kOrderedLocal:
      return "ordered-local";
    case Provenance::kPruned:
      return "pruned";
  }
  return "unknown";
}

std::vector<CiStatement> ReducedBasis::Statements() const {
  std::vector<CiStatement> out;
  out.reserve(statements.size());
  for (const auto& entry : statements) out.push_back(entry.statement);
  return out;
}

namespace {

class BasisBuilder {
 public:
  BasisBuilder(const Admg& g, Ordering ord) : g_(g) {
    basis_.ordering = std::move(ord);
  }

  // Returns the index of the statement in the list (an existing index when it
  // duplicates an earlier one), or nullopt when vacuous.
  std::optional<std::size_t> Add(VertexId x, Provenance provenance,
                                 std::optional<CiStatement> statement,
                                 const VertexSet& given,
                                 std::optional<VertexSet> ancestral_set) {
    if (!statement) {
      basis_.vacuous.push_back({x, given, provenance});
      return std::nullopt;
    }
    for (std::size_t i = 0; i < basis_.statements.size(); ++i) {
      if (basis_.statements[i].statement == *statement) {
        ++basis_.duplicates_dropped;
        return i;
      }
    }
    basis_.statements.push_back(
        {*std::move(statement), x, provenance, std::move(ancestral_set), {}});
    return basis_.statements.size() - 1;
  }

  void AddLocal(VertexId x, const VertexSet& a) {
    Add(x, Provenance::kOrderedLocal, LocalStatement(g_, x, a),
        MarkovBlanket(g_, x, a), a);
  }

  void AddReduced(VertexId x) {
    Add(x, Provenance::kReducedForm, ReducedStatement(g_, x), g_.ParentsOf(x),
        std::nullopt);
  }

  void Prune(VertexId x, const VertexSet& a, std::optional<std::size_t> by) {
    if (auto statement = LocalStatement(g_, x, a)) {
      basis_.pruned.push_back(
          {*std::move(statement), x, Provenance::kPruned, a, by});
    }
  }

  ReducedBasis Finish() && { return std::move(basis_); }

 private:
  const Admg& g_;
  ReducedBasis basis_;
};

}  // namespace

ReducedBasis OrderedLocalBasis(const Admg& g, const Ordering& ord,
                               std::size_t cap) {
  BasisBuilder builder(g, ord);
  for (VertexId x : ord.sequence()) {
    for (const VertexSet& a : MaximalAncestralSets(g, x, ord, cap)) {
      builder.AddLocal(x, a);
    }
  }
  return std::move(builder).Finish();
}

ReducedBasis ReducedLocalBasis(const Admg& g) {
  if (HasMixedDirectedCycle(g)) {
    throw PreconditionError(
        "graph has a mixed directed cycle; the one-statement-per-vertex "
        "property does not apply (use the general reduction, mode auto)");
  }
  Ordering ord = BuildCollapsedOrdering(g).ordering;
  BasisBuilder builder(g, ord);
  for (VertexId x : ord.sequence()) builder.AddReduced(x);
  return std::move(builder).Finish();
}

ReducedBasis ReduceLocalMarkov(const Admg& g, std::size_t cap) {
  return ReduceLocalMarkov(g, BuildCollapsedOrdering(g).ordering, cap);
}

ReducedBasis ReduceLocalMarkov(const Admg& g, const Ordering& ord,
                               std::size_t cap) {
  BasisBuilder builder(g, ord);
  for (VertexId x : ord.sequence()) {
    if (ReducedFormSuffices(g, x, ord)) {
      builder.AddReduced(x);
      continue;
    }
    const std::vector<VertexSet> sets = MaximalAncestralSets(g, x, ord, cap);
    // pre(x) is ancestral under a consistent ordering, hence listed first.
    if (sets.empty() || !(sets.front() == ord.Prefix(x))) {
      throw InternalError("pre(" + g.name(x) + ") missing from its maximal "
                          "ancestral sets");
    }
    const VertexSet& prefix = sets.front();
    const std::optional<std::size_t> prefix_index =
        builder.Add(x, Provenance::kOrderedLocal, LocalStatement(g, x, prefix),
                    MarkovBlanket(g, x, prefix), prefix);
    for (std::size_t i = 1; i < sets.size(); ++i) {
      if (ImpliedByPrefixStatement(g, x, ord, sets[i])) {
        builder.Prune(x, sets[i], prefix_index);
      } else {
        builder.AddLocal(x, sets[i]);
      }
    }
  }
  return std::move(builder).Finish();
}

}  // namespace admg
