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

#include "admg/vertex_set.h"

#include <unordered_set>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace admg {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;

TEST(VertexSetTest, StartsEmpty) {
  const VertexSet s(5);
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(s.size(), 0);
  EXPECT_EQ(s.universe_size(), 5);
  EXPECT_THAT(s.members(), IsEmpty());
}

TEST(VertexSetTest, IteratesInIdOrder) {
  const VertexSet s(10, {7, 2, 9, 0});
  EXPECT_THAT(s.members(), ElementsAre(0, 2, 7, 9));
  EXPECT_EQ(s.front(), 0);
}

TEST(VertexSetTest, SetAlgebra) {
  const VertexSet a(6, {0, 1, 2});
  const VertexSet b(6, {2, 3});
  EXPECT_EQ(a | b, VertexSet(6, {0, 1, 2, 3}));
  EXPECT_EQ(a & b, VertexSet(6, {2}));
  EXPECT_EQ(a - b, VertexSet(6, {0, 1}));
  EXPECT_TRUE(VertexSet(6, {1, 2}).IsSubsetOf(a));
  EXPECT_FALSE(b.IsSubsetOf(a));
  EXPECT_TRUE(a.Intersects(b));
  EXPECT_FALSE(VertexSet(6, {4}).Intersects(a));
}

TEST(VertexSetTest, InsertAndErase) {
  VertexSet s(4);
  s.insert(3);
  s.insert(1);
  s.erase(3);
  EXPECT_TRUE(s.contains(1));
  EXPECT_FALSE(s.contains(3));
  EXPECT_FALSE(s.contains(99));
}

TEST(VertexSetTest, OrdersByMemberSequence) {
  // {0,5} < {1} because 0 < 1; {0} < {0,1} as a proper prefix.
  EXPECT_LT(VertexSet(6, {0, 5}), VertexSet(6, {1}));
  EXPECT_LT(VertexSet(6, {0}), VertexSet(6, {0, 1}));
  EXPECT_FALSE(VertexSet(6, {1}) < VertexSet(6, {1}));
}

TEST(VertexSetTest, MaskRoundTrip) {
  const VertexSet s = VertexSet::FromMask(8, 0b10010110);
  EXPECT_THAT(s.members(), ElementsAre(1, 2, 4, 7));
  EXPECT_EQ(s.ToMask(), 0b10010110u);
  EXPECT_EQ(VertexSet::Full(3).ToMask(), 0b111u);
}

TEST(VertexSetTest, HashesEqualSetsEqually) {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  seen.insert(VertexSet(5, {1, 3}));
  seen.insert(VertexSet(5, {3, 1}));
  seen.insert(VertexSet(5, {2}));
  EXPECT_EQ(seen.size(), 2);
}

}  // namespace
}  // namespace admg
