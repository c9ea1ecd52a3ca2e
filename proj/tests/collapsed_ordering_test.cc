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

#include <random>

#include "admg/fixtures.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "testing/random_graphs.h"

namespace admg {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;
using Kind = CollapseEvent::Kind;

TEST(CollapsedOrderingTest, Figure3MergesAbAndDeAndDropsBc) {
  const Admg g = LoadFixture("figure3");
  const CollapsedOrdering c = BuildCollapsedOrdering(g);
  ASSERT_EQ(c.events.size(), 3);
  EXPECT_EQ(c.events[0].kind, Kind::kMerge);
  EXPECT_EQ(g.name(c.events[0].u) + g.name(c.events[0].v), "ab");
  EXPECT_EQ(c.events[1].kind, Kind::kRemove);
  EXPECT_EQ(g.name(c.events[1].u) + g.name(c.events[1].v), "bc");
  EXPECT_EQ(c.events[1].first_block, g.Set({"a", "b"}));
  EXPECT_EQ(c.events[2].kind, Kind::kMerge);
  EXPECT_EQ(g.name(c.events[2].u) + g.name(c.events[2].v), "de");
  EXPECT_THAT(c.ordering.Names(g),
              ElementsAre("h", "f", "a", "b", "d", "e", "i", "g", "c"));
  EXPECT_THAT(c.blocks, ElementsAre(g.Set({"h"}), g.Set({"f"}),
                                    g.Set({"a", "b"}), g.Set({"d", "e"}),
                                    g.Set({"i"}), g.Set({"g"}),
                                    g.Set({"c"})));
}

TEST(CollapsedOrderingTest, Figure2KeepsDistrictTogether) {
  const Admg g = LoadFixture("figure2");
  const CollapsedOrdering c = BuildCollapsedOrdering(g);
  EXPECT_THAT(c.ordering.Names(g), ElementsAre("e", "d", "a", "b", "c"));
  for (const CollapseEvent& e : c.events) EXPECT_EQ(e.kind, Kind::kMerge);
}

TEST(CollapsedOrderingTest, DagGivesTopologicalOrder) {
  const Admg g = Admg::FromEdges({}, {{"c", "a"}, {"b", "a"}, {"d", "b"}},
                                 {});
  const CollapsedOrdering c = BuildCollapsedOrdering(g);
  EXPECT_THAT(c.events, IsEmpty());
  EXPECT_THAT(c.ordering.Names(g), ElementsAre("c", "d", "b", "a"));
}

TEST(CollapsedOrderingTest, Figure1RemovesOneEdgeOfTheCycle) {
  const Admg g = LoadFixture("figure1");
  const CollapsedOrdering c = BuildCollapsedOrdering(g);
  ASSERT_EQ(c.events.size(), 2);
  // a -> c <-> d -> b joins a and b, so a <-> b goes; c <-> d then merges.
  EXPECT_EQ(c.events[0].kind, Kind::kRemove);
  EXPECT_EQ(c.events[1].kind, Kind::kMerge);
  EXPECT_THAT(c.ordering.Names(g), ElementsAre("a", "c", "d", "b"));
}

TEST(CollapsedOrderingPropertyTest, CycleFreeGraphsKeepDistrictsConsecutive) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 300; ++i) {
    const Admg g = testing::RandomCycleFreeAdmg(rng, 8, 0.4, 0.5);
    const Ordering ord = BuildCollapsedOrdering(g).ordering;
    for (VertexId x = 0; x < g.size(); ++x) {
      const VertexSet district = District(g, x);
      const VertexSet outside = Descendants(g, district) - district;
      ASSERT_FALSE(ord.Prefix(x).Intersects(outside));
      std::size_t lo = g.size(), hi = 0;
      for (VertexId v : district) {
        lo = std::min(lo, ord.position(v));
        hi = std::max(hi, ord.position(v));
      }
      ASSERT_EQ(hi - lo + 1, district.size());
    }
  }
}

TEST(CollapsedOrderingPropertyTest, AnyGraphYieldsAConsistentOrdering) {
  for (const Admg& g : testing::RandomGraphSuite(52, 400, 8)) {
    CollapsedOrdering c;
    ASSERT_NO_THROW(c = BuildCollapsedOrdering(g));
    ASSERT_EQ(c.ordering.size(), g.size());
    // Edges inside an already merged block produce no event.
    ASSERT_LE(c.events.size(), g.bidirected_edges().size());
    std::size_t covered = 0;
    for (const VertexSet& b : c.blocks) covered += b.size();
    ASSERT_EQ(covered, g.size());
  }
}

}  // namespace
}  // namespace admg
