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

#include "admg/ci_engine.h"

#include <random>

#include "admg/errors.h"
#include "admg/fixtures.h"
#include "admg/local_markov.h"
#include "admg/msep.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "testing/oracles.h"
#include "testing/random_graphs.h"
#include "testing/statements.h"

namespace admg {
namespace {

using ::testing::IsEmpty;
using testing::Statement;

std::vector<CiStatement> List17(const Admg& g) {
  return {Statement(g, {"a"}, {"d"}, {"e"}), Statement(g, {"b"}, {"d"}, {"e"}),
          Statement(g, {"c"}, {"d"}, {"e"})};
}

std::vector<CiStatement> List16(const Admg& g) {
  return {Statement(g, {"a"}, {"d"}, {"e"}),
          Statement(g, {"b"}, {"d"}, {"e"}),
          Statement(g, {"b"}, {"a", "d"}, {"e"}),
          Statement(g, {"c"}, {"d"}, {"e"}),
          Statement(g, {"c"}, {"a", "d"}, {"e"}),
          Statement(g, {"c"}, {"b", "d"}, {"e"}),
          Statement(g, {"c"}, {"a", "b", "d"}, {"e"})};
}

// A random statement over n vertices, or nullopt if X or Y came out empty.
std::optional<CiStatement> RandomStatement(std::mt19937_64& rng,
                                           std::size_t n) {
  std::uniform_int_distribution<int> role(0, 3);
  VertexSet x(n), z(n), y(n);
  for (VertexId v = 0; v < n; ++v) {
    switch (role(rng)) {
      case 1: x.insert(v); break;
      case 2: z.insert(v); break;
      case 3: y.insert(v); break;
      default: break;
    }
  }
  if (x.empty() || y.empty()) return std::nullopt;
  return CiStatement(x, z, y);
}

std::vector<CiStatement> RandomSeed(std::mt19937_64& rng, std::size_t n,
                                    std::size_t count) {
  std::vector<CiStatement> seed;
  while (seed.size() < count) {
    if (auto s = RandomStatement(rng, n)) seed.push_back(*s);
  }
  return seed;
}

std::set<testing::MaskStatement> BothOrientations(const StatementClosure& c) {
  std::set<testing::MaskStatement> out;
  for (const CiStatement& s : c.Statements()) {
    out.insert(testing::ToMasks(s));
    out.insert(testing::ToMasks(s.Swapped()));
  }
  return out;
}

TEST(StatementUniverseTest, SymmetricStatementsShareASlot) {
  const StatementUniverse u(4);
  const CiStatement s(VertexSet(4, {2}), VertexSet(4, {0}),
                      VertexSet(4, {1, 3}));
  EXPECT_EQ(u.Slot(s), u.Slot(s.Swapped()));
  EXPECT_EQ(u.Decode(u.Slot(s)), s);
  EXPECT_EQ(u.slot_count(), 256);
}

TEST(StatementUniverseTest, CapsAreEnforced) {
  EXPECT_THROW(StatementUniverse(13), CapacityError);
  EXPECT_NO_THROW(StatementUniverse(12));
  EXPECT_THROW(StatementUniverse(5, 4), CapacityError);
  EXPECT_THROW(StatementUniverse(16, 16), CapacityError);
}

TEST(ClosureTest, ReducedListImpliesOrderedListUnderComposition) {
  const Admg g = LoadFixture("figure2");
  const StatementUniverse u(g.size());
  const StatementClosure c =
      Closure(u, List17(g), AxiomSet::WithComposition());
  for (const CiStatement& s : List16(g)) {
    EXPECT_TRUE(c.Contains(s)) << FormatStatement(g, s);
  }
}

TEST(ClosureTest, ReducedListNeedsComposition) {
  const Admg g = LoadFixture("figure2");
  const StatementUniverse u(g.size());
  const StatementClosure c = Closure(u, List17(g), AxiomSet::SemiGraphoid());
  EXPECT_FALSE(c.Contains(Statement(g, {"c"}, {"a", "b", "d"}, {"e"})));
}

TEST(ClosureTest, EmptySeedGivesEmptyClosure) {
  const StatementUniverse u(5);
  const StatementClosure c = Closure(u, {}, AxiomSet::WithComposition());
  EXPECT_EQ(c.size(), 0);
  EXPECT_THAT(c.Statements(), IsEmpty());
}

TEST(ClosureTest, WeakUnionAndDecompositionOnce) {
  const Admg g = Admg::FromEdges({"w", "x", "y"}, {}, {});
  const StatementUniverse u(g.size());
  const std::vector<CiStatement> seed = {Statement(g, {"x"}, {}, {"y", "w"})};
  const StatementClosure c = Closure(u, seed, AxiomSet::SemiGraphoid());
  EXPECT_TRUE(c.Contains(Statement(g, {"x"}, {"w"}, {"y"})));
  EXPECT_TRUE(c.Contains(Statement(g, {"x"}, {}, {"y"})));
  EXPECT_TRUE(c.Contains(Statement(g, {"y"}, {}, {"x"})));
  EXPECT_FALSE(c.Contains(Statement(g, {"y"}, {}, {"w"})));
}

TEST(ImpliesTest, Figure2Examples) {
  const Admg g = LoadFixture("figure2");
  const StatementUniverse u(g.size());
  const AxiomSet axioms = AxiomSet::WithComposition();
  EXPECT_TRUE(
      Implies(u, List17(g), Statement(g, {"b"}, {"a", "d"}, {"e"}), axioms));
  EXPECT_FALSE(Implies(u, List17(g), Statement(g, {"a"}, {"d"}, {"b"}), axioms));
  EXPECT_TRUE(Implies(u, List17(g), List17(g)[1], axioms));
  const StatementClosure c = Closure(u, List17(g), axioms);
  EXPECT_FALSE(c.Contains(Statement(g, {"a"}, {"d"}, {"b"})));
}

TEST(ClosurePropertyTest, MatchesNaiveFixpoint) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = trial < 100 ? 4 : 5;
    const StatementUniverse u(n);
    const std::vector<CiStatement> seed = RandomSeed(rng, n, 1 + trial % 4);
    for (bool composition : {false, true}) {
      const StatementClosure c = Closure(u, seed, AxiomSet{composition});
      ASSERT_EQ(BothOrientations(c), testing::NaiveClosure(seed, composition))
          << "trial " << trial << " composition " << composition;
    }
  }
}

TEST(ClosurePropertyTest, SchedulesAgree) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + trial % 4;
    const StatementUniverse u(n);
    const std::vector<CiStatement> seed = RandomSeed(rng, n, 1 + trial % 5);
    for (bool composition : {false, true}) {
      ASSERT_EQ(Closure(u, seed, AxiomSet{composition},
                        ClosureSchedule::kWorklist),
                Closure(u, seed, AxiomSet{composition},
                        ClosureSchedule::kRoundRobin));
    }
  }
}

TEST(ClosurePropertyTest, ClosureOperatorLaws) {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + trial % 2;
    const StatementUniverse u(n);
    const std::vector<CiStatement> seed = RandomSeed(rng, n, 3);
    const std::vector<CiStatement> smaller(seed.begin(), seed.begin() + 2);
    const StatementClosure sg = Closure(u, seed, AxiomSet::SemiGraphoid());
    const StatementClosure comp = Closure(u, seed, AxiomSet::WithComposition());
    const StatementClosure small = Closure(u, smaller, AxiomSet::SemiGraphoid());
    // Extensive.
    for (const CiStatement& s : seed) ASSERT_TRUE(sg.Contains(s));
    // Idempotent.
    ASSERT_EQ(Closure(u, sg.Statements(), AxiomSet::SemiGraphoid()), sg);
    // Monotone in seed and in axioms; symmetric.
    for (const CiStatement& s : small.Statements()) ASSERT_TRUE(sg.Contains(s));
    for (const CiStatement& s : sg.Statements()) {
      ASSERT_TRUE(comp.Contains(s));
      ASSERT_TRUE(sg.Contains(s.Swapped()));
    }
  }
}

TEST(ClosurePropertyTest, ImpliesEqualsMembership) {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 4;
    const StatementUniverse u(n);
    const std::vector<CiStatement> seed = RandomSeed(rng, n, 2);
    const AxiomSet axioms{trial % 2 == 0};
    const StatementClosure c = Closure(u, seed, axioms);
    for (std::uint32_t slot = 0; slot < u.slot_count(); ++slot) {
      std::optional<CiStatement> target;
      try {
        target = u.Decode(slot);
      } catch (const InputError&) {
        continue;  // not a well-formed statement
      }
      if (u.Slot(*target) != slot) continue;
      ASSERT_EQ(Implies(u, seed, *target, axioms), c.Contains(*target));
    }
  }
}

TEST(ClosurePropertyTest, SoundForMSeparation) {
  std::mt19937_64 rng(65);
  for (const Admg& g : testing::RandomGraphSuite(66, 120, 6)) {
    const StatementUniverse u(g.size());
    const std::vector<CiStatement> seed =
        OrderedLocalMarkov(g, testing::RandomConsistentOrdering(rng, g));
    const StatementClosure c = Closure(u, seed, AxiomSet::WithComposition());
    for (const CiStatement& s : c.Statements()) {
      ASSERT_TRUE(MSeparated(g, {s.x(), s.y(), s.z()}))
          << FormatStatement(g, s);
    }
  }
}

}  // namespace
}  // namespace admg
