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

#include "testing/random_graphs.h"

#include <algorithm>
#include <numeric>
#include <string>

namespace admg::testing {
namespace {

std::vector<std::string> Names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return names;
}

}  // namespace

Admg RandomAdmg(std::mt19937_64& rng, std::size_t n, double p_directed,
                double p_bidirected) {
  const std::vector<std::string> names = Names(n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution directed(p_directed);
  std::bernoulli_distribution bidirected(p_bidirected);
  std::vector<Admg::NamedEdge> d, b;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (directed(rng)) d.emplace_back(names[order[i]], names[order[j]]);
      if (bidirected(rng)) b.emplace_back(names[order[i]], names[order[j]]);
    }
  }
  return Admg::FromEdges(names, d, b);
}

Admg RandomCycleFreeAdmg(std::mt19937_64& rng, std::size_t n,
                         double p_directed, double p_bidirected) {
  const std::vector<std::string> names = Names(n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  // block[i] is non-decreasing along `order`.
  std::bernoulli_distribution new_block(0.5);
  std::vector<std::size_t> block(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    block[i] = block[i - 1] + (new_block(rng) ? 1 : 0);
  }
  std::bernoulli_distribution directed(p_directed);
  std::bernoulli_distribution bidirected(p_bidirected);
  std::vector<Admg::NamedEdge> d, b;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (block[i] == block[j]) {
        if (bidirected(rng)) b.emplace_back(names[order[i]], names[order[j]]);
      } else if (directed(rng)) {
        d.emplace_back(names[order[i]], names[order[j]]);
      }
    }
  }
  return Admg::FromEdges(names, d, b);
}

Admg RandomBidirectedGraph(std::mt19937_64& rng, std::size_t n, double p) {
  return RandomAdmg(rng, n, 0.0, p);
}

std::vector<Admg> RandomGraphSuite(std::uint64_t seed, std::size_t count,
                                   std::size_t max_n) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, max_n);
  std::uniform_real_distribution<double> density(0.15, 0.6);
  std::vector<Admg> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = size(rng);
    const double pd = density(rng);
    const double pb = density(rng) * 0.6;
    switch (i % 3) {
      case 0:
        out.push_back(RandomAdmg(rng, n, pd, pb));
        break;
      case 1:
        out.push_back(RandomCycleFreeAdmg(rng, n, pd, pb + 0.2));
        break;
      default:
        out.push_back(i % 9 == 2 ? RandomBidirectedGraph(rng, n, pd)
                                 : RandomAdmg(rng, n, pd * 0.7, pb + 0.2));
        break;
    }
  }
  return out;
}

Ordering RandomConsistentOrdering(std::mt19937_64& rng, const Admg& g) {
  std::vector<std::size_t> pending(g.size());
  for (VertexId v = 0; v < g.size(); ++v) pending[v] = g.ParentsOf(v).size();
  std::vector<VertexId> ready, sequence;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (pending[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    const std::size_t i = pick(rng);
    const VertexId v = ready[i];
    ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(i));
    sequence.push_back(v);
    for (VertexId c : g.ChildrenOf(v)) {
      if (--pending[c] == 0) ready.push_back(c);
    }
  }
  return Ordering::FromIds(g, sequence);
}

std::vector<VertexSet> AllSubsets(const Admg& g, const VertexSet& within) {
  const std::vector<VertexId> members = within.members();
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << members.size());
       ++mask) {
    VertexSet s = g.EmptySet();
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (mask >> i & 1) s.insert(members[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace admg::testing
