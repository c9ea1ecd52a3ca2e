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

#include <functional>
#include <random>

#include "admg/errors.h"
#include "admg/fixtures.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "testing/oracles.h"
#include "testing/random_graphs.h"

namespace admg {
namespace {

using ::testing::ElementsAre;

Admg Figure2() { return LoadFixture("figure2"); }
Admg Figure3() { return LoadFixture("figure3"); }

GraphError::Kind KindOf(const std::function<void()>& build) {
  try {
    build();
  } catch (const GraphError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no GraphError thrown";
  return GraphError::Kind::kInvalidName;
}

TEST(AdmgTest, EmptyGraph) {
  const Admg g = Admg::FromEdges({}, {}, {});
  EXPECT_EQ(g.size(), 0);
  EXPECT_TRUE(CComponents(g).empty());
  EXPECT_FALSE(HasMixedDirectedCycle(g));
}

TEST(AdmgTest, VerticesAreSortedByName) {
  const Admg g = Admg::FromEdges({"z", "b"}, {{"m", "a"}}, {});
  EXPECT_THAT(g.names(), ElementsAre("a", "b", "m", "z"));
  EXPECT_EQ(g.Id("m"), 2);
  EXPECT_FALSE(g.Find("q").has_value());
  EXPECT_THROW(g.Id("q"), InputError);
}

TEST(AdmgTest, RejectsMalformedEdges) {
  EXPECT_EQ(KindOf([] { Admg::FromEdges({}, {{"x", "x"}}, {}); }),
            GraphError::Kind::kSelfLoop);
  EXPECT_EQ(KindOf([] { Admg::FromEdges({}, {}, {{"x", "x"}}); }),
            GraphError::Kind::kSelfLoop);
  EXPECT_EQ(KindOf([] { Admg::FromEdges({}, {{"x", "y"}, {"x", "y"}}, {}); }),
            GraphError::Kind::kDuplicateEdge);
  EXPECT_EQ(KindOf([] { Admg::FromEdges({}, {}, {{"x", "y"}, {"y", "x"}}); }),
            GraphError::Kind::kDuplicateEdge);
  EXPECT_EQ(
      KindOf([] { Admg::FromEdges({}, {{"x", "y"}, {"y", "z"}, {"z", "x"}}, {}); }),
      GraphError::Kind::kDirectedCycle);
  EXPECT_EQ(KindOf([] { Admg::FromEdges({"a b"}, {}, {}); }),
            GraphError::Kind::kInvalidName);
  EXPECT_EQ(KindOf([] { Admg::FromEdges({}, {{"x", "y"}, {"y", "x"}}, {}); }),
            GraphError::Kind::kDirectedCycle);
}

TEST(AdmgTest, DirectedAndBidirectedEdgeMayShareAPair) {
  const Admg g = Admg::FromEdges({}, {{"x", "y"}}, {{"x", "y"}});
  EXPECT_TRUE(g.HasDirectedEdge(g.Id("x"), g.Id("y")));
  EXPECT_TRUE(g.HasBidirectedEdge(g.Id("y"), g.Id("x")));
}

TEST(AdmgTest, Figure2Relations) {
  const Admg g = Figure2();
  EXPECT_EQ(Parents(g, g.Set({"a"})), g.Set({"d"}));
  EXPECT_EQ(Spouses(g, g.Set({"a"})), g.Set({"b", "c"}));
  EXPECT_EQ(Children(g, g.Set({"d"})), g.Set({"a", "b", "c"}));
  EXPECT_EQ(Ancestors(g, g.Set({"a", "c"})), g.Set({"a", "c", "d", "e"}));
  EXPECT_EQ(Descendants(g, g.Set({"e"})), g.AllVertices());
  EXPECT_EQ(Ancestors(g, g.EmptySet()), g.EmptySet());
}

TEST(AdmgTest, Figure2AncestralSets) {
  const Admg g = Figure2();
  EXPECT_TRUE(IsAncestral(g, g.Set({"a", "c", "d", "e"})));
  EXPECT_FALSE(IsAncestral(g, g.Set({"a"})));
  EXPECT_TRUE(IsAncestral(g, g.EmptySet()));
  EXPECT_EQ(AncestralClosure(g, g.Set({"b"})), g.Set({"b", "d", "e"}));
}

TEST(AdmgTest, Figure2DistrictInsideAncestralSet) {
  const Admg g = Figure2();
  const VertexSet a = g.Set({"a", "c", "d", "e"});
  EXPECT_EQ(District(g, g.Id("a"), a), g.Set({"a", "c"}));
  EXPECT_EQ(District(g, g.Id("a")), g.Set({"a", "b", "c"}));
  EXPECT_THROW(District(g, g.Id("b"), a), InputError);
}

TEST(AdmgTest, InducedSubgraphKeepsInternalEdges) {
  const Admg g = Figure2();
  const Admg sub = InducedSubgraph(g, g.Set({"a", "c", "d"}));
  EXPECT_THAT(sub.names(), ElementsAre("a", "c", "d"));
  EXPECT_EQ(sub.directed_edges().size(), 2);
  EXPECT_EQ(sub.bidirected_edges().size(), 1);
  EXPECT_EQ(InducedSubgraph(g, g.AllVertices()), g);
  EXPECT_EQ(InducedSubgraph(g, g.EmptySet()).size(), 0);
}

TEST(AdmgTest, Figure1Structure) {
  const Admg g = LoadFixture("figure1");
  EXPECT_THAT(CComponents(g),
              ElementsAre(g.Set({"a", "b"}), g.Set({"c", "d"})));
  EXPECT_TRUE(HasMixedDirectedCycle(g));
}

TEST(AdmgTest, Figure2HasNoMixedDirectedCycle) {
  EXPECT_FALSE(HasMixedDirectedCycle(Figure2()));
}

TEST(AdmgTest, Figure3Districts) {
  const Admg g = Figure3();
  EXPECT_THAT(CComponents(g),
              ElementsAre(g.Set({"a", "b", "c"}), g.Set({"d", "e"}),
                          g.Set({"f"}), g.Set({"g"}), g.Set({"h"}),
                          g.Set({"i"})));
}

TEST(AdmgTest, Figure3MixedDirectedPaths) {
  const Admg g = Figure3();
  // b -> d <-> e -> c
  EXPECT_TRUE(HasMixedDirectedPath(g, g.Id("b"), g.Id("c")));
  EXPECT_FALSE(HasMixedDirectedPath(g, g.Id("a"), g.Id("b")));
  EXPECT_FALSE(HasMixedDirectedPath(g, g.Id("b"), g.Id("a")));
  EXPECT_TRUE(HasMixedDirectedCycle(g));
}

TEST(AdmgTest, BidirectedOnlyPathIsNotMixedDirected) {
  const Admg g = Admg::FromEdges({}, {}, {{"x", "y"}, {"y", "z"}});
  EXPECT_FALSE(HasMixedDirectedPath(g, g.Id("x"), g.Id("z")));
}

TEST(AdmgTest, MixedDirectedPathMustBeSimple) {
  // A walk a <-> g -> d <-> g <-> b reaches b with a directed edge, but it
  // revisits g; every simple path from a to b is purely bi-directed.
  const Admg g = Admg::FromEdges(
      {}, {{"g", "d"}}, {{"a", "g"}, {"g", "b"}, {"g", "d"}});
  EXPECT_FALSE(HasMixedDirectedPath(g, g.Id("a"), g.Id("b")));
  EXPECT_TRUE(HasMixedDirectedPath(g, g.Id("a"), g.Id("d")));
}

TEST(AdmgTest, MixedDirectedPathRejectsEqualEndpoints) {
  const Admg g = Figure2();
  EXPECT_THROW(HasMixedDirectedPath(g, g.Id("a"), g.Id("a")), InputError);
}

TEST(AdmgTest, UnknownSetsAreRejected) {
  const Admg g = Figure2();
  EXPECT_THROW(Parents(g, VertexSet(9, {1})), InputError);
  EXPECT_THROW(g.Set({"zz"}), InputError);
}

TEST(AdmgPropertyTest, MixedDirectedPathsMatchSimplePathEnumeration) {
  for (const Admg& g : testing::RandomGraphSuite(11, 300, 7)) {
    for (VertexId a = 0; a < g.size(); ++a) {
      for (VertexId b = 0; b < g.size(); ++b) {
        if (a == b) continue;
        ASSERT_EQ(HasMixedDirectedPath(g, a, b),
                  testing::MixedDirectedPathBySimplePaths(g, a, b))
            << a << " to " << b;
      }
    }
    ASSERT_EQ(HasMixedDirectedCycle(g),
              testing::MixedDirectedCycleBySimplePaths(g));
  }
}

TEST(AdmgPropertyTest, CycleFreeGeneratorHasNoMixedDirectedCycle) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Admg g = testing::RandomCycleFreeAdmg(rng, 7, 0.5, 0.6);
    ASSERT_FALSE(testing::MixedDirectedCycleBySimplePaths(g));
  }
}

TEST(AdmgPropertyTest, DistrictsPartitionTheVertices) {
  for (const Admg& g : testing::RandomGraphSuite(12, 100, 8)) {
    VertexSet seen = g.EmptySet();
    for (const VertexSet& c : CComponents(g)) {
      ASSERT_FALSE(c.Intersects(seen));
      seen |= c;
      for (VertexId v : c) ASSERT_EQ(District(g, v), c);
    }
    ASSERT_EQ(seen, g.AllVertices());
  }
}

TEST(AdmgPropertyTest, AncestralClosureIsSmallestAncestralSuperset) {
  for (const Admg& g : testing::RandomGraphSuite(13, 60, 6)) {
    for (const VertexSet& s : testing::AllSubsets(g, g.AllVertices())) {
      const VertexSet closure = AncestralClosure(g, s);
      ASSERT_TRUE(s.IsSubsetOf(closure));
      ASSERT_TRUE(testing::IsAncestralByEdges(g, closure));
      ASSERT_EQ(IsAncestral(g, s), testing::IsAncestralByEdges(g, s));
      if (IsAncestral(g, s)) {
        ASSERT_EQ(closure, s);
      }
    }
  }
}

}  // namespace
}  // namespace admg
