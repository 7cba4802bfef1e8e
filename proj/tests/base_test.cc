// Copyright 2026 The Authors.
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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "sfm/base.h"
#include "sfm/errors.h"
#include "sfm/generators.h"
#include "sfm/ordering.h"
#include "sfm/verify.h"
#include "test_util.h"

namespace sfm {
namespace {

using testing::AbTable;
using testing::Mask;
using testing::ModularOracle;
using testing::Q;
using testing::Qs;
using testing::SingleEdgeCut;

LinearOrdering RandomOrdering(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  for (int v = 0; v < n; ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  return LinearOrdering(perm);
}

ExtremeBase BaseFromY(std::vector<Rational> y) {
  ExtremeBase b;
  b.ordering = LinearOrdering::Identity(static_cast<int>(y.size()));
  b.y = std::move(y);
  return b;
}

TEST(OrderingTest, PositionsInvertThePermutation) {
  const LinearOrdering L({2, 0, 3, 1});
  for (int k = 0; k < 4; ++k) EXPECT_EQ(L.position(L.at(k)), k);
  EXPECT_EQ(L.Prefix(1).Indices(), (std::vector<int>{0, 2}));
}

TEST(OrderingTest, SwapAdjacent) {
  LinearOrdering L({2, 0, 3, 1});
  L.SwapAdjacent(2);
  EXPECT_EQ(L.perm(), (std::vector<int>{2, 3, 0, 1}));
  EXPECT_EQ(L.position(0), 2);
  EXPECT_THROW(L.SwapAdjacent(0), InvalidArgumentError);
  EXPECT_THROW(L.SwapAdjacent(4), InvalidArgumentError);
}

TEST(OrderingTest, RejectsNonPermutations) {
  EXPECT_THROW(LinearOrdering({0, 0}), InvalidArgumentError);
  EXPECT_THROW(LinearOrdering({0, 2}), InvalidArgumentError);
}

TEST(GreedyTest, ModularFunctionGivesItsWeights) {
  const auto w = Qs({3, -2, 5, 0});
  const SetFunctionOracle f = ModularOracle(w);
  EXPECT_EQ(GreedyExtremeBase(f, LinearOrdering({3, 1, 0, 2})).y, w);
}

TEST(GreedyTest, SingleEdgeCut) {
  EXPECT_EQ(GreedyExtremeBase(SingleEdgeCut(), LinearOrdering::Identity(2)).y,
            Qs({1, -1}));
}

TEST(GreedyTest, AbTableReversed) {
  const ExtremeBase b = GreedyExtremeBase(AbTable(), LinearOrdering({1, 0}));
  EXPECT_EQ(b.y[1], 2);
  EXPECT_EQ(b.y[0], -1);
}

TEST(GreedyTest, UsesExactlyNCalls) {
  const SetFunctionOracle f =
      MakeOracle(GenerateInstance("cut", 7, 5), {.cache = false});
  const int64_t before = f.calls();
  GreedyExtremeBase(f, LinearOrdering::Identity(7));
  EXPECT_EQ(f.calls() - before, 7);
}

TEST(GreedyTest, OutputLiesInBasePolyhedron) {
  std::mt19937_64 rng(17);
  for (const auto& family : GeneratorFamilies()) {
    for (int seed = 0; seed < 4; ++seed) {
      const int n = 3 + (seed * 3) % 10;
      const SetFunctionOracle f = MakeOracle(GenerateInstance(family, n, seed));
      const ExtremeBase b = GreedyExtremeBase(f, RandomOrdering(n, rng));
      EXPECT_TRUE(InBasePolyhedron(f, b.y)) << family << " n=" << n;
    }
  }
}

TEST(ExchangeTest, SingleEdgeCut) {
  const SetFunctionOracle f = SingleEdgeCut();
  const ExtremeBase b = GreedyExtremeBase(f, LinearOrdering::Identity(2));
  EXPECT_EQ(ExchangeCapacityConsecutive(f, b, 1), 2);
}

TEST(ExchangeTest, ModularFunctionHasNoExchange) {
  const SetFunctionOracle f = ModularOracle(Qs({4, -1, 2}));
  const ExtremeBase b = GreedyExtremeBase(f, LinearOrdering({2, 0, 1}));
  EXPECT_EQ(ExchangeCapacityConsecutive(f, b, 1), 0);
  EXPECT_EQ(ExchangeCapacityConsecutive(f, b, 2), 0);
}

TEST(ExchangeTest, AbTable) {
  const SetFunctionOracle f = AbTable();
  const ExtremeBase b = GreedyExtremeBase(f, LinearOrdering::Identity(2));
  EXPECT_EQ(ExchangeCapacityConsecutive(f, b, 1), 0);
}

TEST(ExchangeTest, PositionOutOfRangeThrows) {
  const SetFunctionOracle f = AbTable();
  const ExtremeBase b = GreedyExtremeBase(f, LinearOrdering::Identity(2));
  EXPECT_THROW(ExchangeCapacityConsecutive(f, b, 0), InvalidArgumentError);
  EXPECT_THROW(ExchangeCapacityConsecutive(f, b, 2), InvalidArgumentError);
}

TEST(ExchangeTest, UsesOneCall) {
  const SetFunctionOracle f =
      MakeOracle(GenerateInstance("coverage", 6, 2), {.cache = false});
  const ExtremeBase b = GreedyExtremeBase(f, LinearOrdering::Identity(6));
  const int64_t before = f.calls();
  ExchangeCapacityConsecutive(f, b, 3);
  EXPECT_EQ(f.calls() - before, 1);
}

TEST(ExchangeTest, MatchesBruteForceAndIsNonnegative) {
  std::mt19937_64 rng(99);
  for (const auto& family : GeneratorFamilies()) {
    for (int seed = 0; seed < 6; ++seed) {
      const int n = 2 + (seed * 5) % 11;
      const SetFunctionOracle f = MakeOracle(GenerateInstance(family, n, seed));
      const ExtremeBase b = GreedyExtremeBase(f, RandomOrdering(n, rng));
      for (int k = 1; k < n; ++k) {
        const Rational beta = ExchangeCapacityConsecutive(f, b, k);
        EXPECT_GE(beta, 0);
        EXPECT_EQ(beta, ExchangeCapacityBruteForce(f, b.y, b.ordering.at(k),
                                                   b.ordering.at(k - 1)))
            << family << " n=" << n << " k=" << k;
      }
    }
  }
}

TEST(InterchangeTest, SingleEdgeCut) {
  const SetFunctionOracle f = SingleEdgeCut();
  const ExtremeBase b = GreedyExtremeBase(f, LinearOrdering::Identity(2));
  const ExtremeBase swapped = ApplyInterchange(b, 1, Rational(2));
  EXPECT_EQ(swapped.y, Qs({-1, 1}));
  EXPECT_EQ(swapped.ordering.perm(), (std::vector<int>{1, 0}));
  EXPECT_EQ(swapped.y, GreedyExtremeBase(f, LinearOrdering({1, 0})).y);
}

TEST(InterchangeTest, ZeroCapacitySwapsOnly) {
  const SetFunctionOracle f = AbTable();
  const ExtremeBase b = GreedyExtremeBase(f, LinearOrdering::Identity(2));
  const ExtremeBase swapped = ApplyInterchange(b, 1, Rational(0));
  EXPECT_EQ(swapped.y, b.y);
  EXPECT_EQ(swapped.ordering.perm(), (std::vector<int>{1, 0}));
}

TEST(InterchangeTest, ModularKeepsY) {
  const SetFunctionOracle f = ModularOracle(Qs({1, 2, 3}));
  const ExtremeBase b = GreedyExtremeBase(f, LinearOrdering::Identity(3));
  const ExtremeBase swapped =
      ApplyInterchange(b, 2, ExchangeCapacityConsecutive(f, b, 2));
  EXPECT_EQ(swapped.y, b.y);
  EXPECT_EQ(swapped.ordering.perm(), (std::vector<int>{0, 2, 1}));
}

TEST(InterchangeTest, AgreesWithGreedyOnSwappedOrdering) {
  std::mt19937_64 rng(5);
  for (const auto& family : GeneratorFamilies()) {
    for (int seed = 0; seed < 10; ++seed) {
      const int n = 2 + seed % 9;
      const SetFunctionOracle f = MakeOracle(GenerateInstance(family, n, seed));
      const ExtremeBase b = GreedyExtremeBase(f, RandomOrdering(n, rng));
      const int k = 1 + static_cast<int>(rng() % (n - 1));
      const ExtremeBase swapped =
          ApplyInterchange(b, k, ExchangeCapacityConsecutive(f, b, k));
      const ExtremeBase fresh = GreedyExtremeBase(f, swapped.ordering);
      EXPECT_EQ(swapped.y, fresh.y) << family << " n=" << n << " k=" << k;
      EXPECT_EQ(swapped.prefix_values, fresh.prefix_values);
    }
  }
}

TEST(ReduceTest, SingleEntryUnchanged) {
  const ExtremeBase b =
      GreedyExtremeBase(AbTable(), LinearOrdering::Identity(2));
  const ConvexCombination c = ReduceCombination(ConvexCombination(b));
  ASSERT_EQ(c.size(), 1);
  EXPECT_EQ(c.entries[0].lambda, 1);
  EXPECT_EQ(c.x, b.y);
}

TEST(ReduceTest, DuplicateBaseMerges) {
  const ExtremeBase b =
      GreedyExtremeBase(SingleEdgeCut(), LinearOrdering::Identity(2));
  ConvexCombination c;
  c.entries = {{Q("1/2"), b}, {Q("1/2"), b}};
  c.x = c.Sum();
  const ConvexCombination r = ReduceCombination(c);
  ASSERT_EQ(r.size(), 1);
  EXPECT_EQ(r.entries[0].lambda, 1);
  EXPECT_EQ(r.x, b.y);
}

TEST(ReduceTest, ThreeCollinearBasesBecomeTwo) {
  ConvexCombination c;
  for (const auto& y : {Qs({0, 0, 0}), Qs({1, -1, 0}), Qs({3, -3, 0})}) {
    c.entries.push_back({Q("1/3"), BaseFromY(y)});
  }
  c.x = c.Sum();
  const ConvexCombination r = ReduceCombination(c);
  EXPECT_EQ(r.size(), 2);
  EXPECT_EQ(r.x, (std::vector<Rational>{Q("4/3"), Q("-4/3"), 0}));
  EXPECT_EQ(r.Sum(), r.x);
  EXPECT_NO_THROW(r.CheckInvariants());
}

TEST(ReduceTest, TiedStepDropsEveryZeroedEntry) {
  // The middle point is the average of the outer two, so both outer weights
  // reach zero in the same step.
  ConvexCombination c;
  for (const auto& y : {Qs({0, 0, 0}), Qs({1, -1, 0}), Qs({2, -2, 0})}) {
    c.entries.push_back({Q("1/3"), BaseFromY(y)});
  }
  c.x = c.Sum();
  const ConvexCombination r = ReduceCombination(c);
  ASSERT_EQ(r.size(), 1);
  EXPECT_EQ(r.entries[0].base.y, Qs({1, -1, 0}));
  EXPECT_EQ(r.entries[0].lambda, 1);
}

TEST(ReduceTest, PreservesXAndLeavesAtMostNEntries) {
  std::mt19937_64 rng(23);
  for (const auto& family : GeneratorFamilies()) {
    for (int seed = 0; seed < 8; ++seed) {
      const int n = 1 + seed % 8;
      const SetFunctionOracle f = MakeOracle(GenerateInstance(family, n, seed));
      ConvexCombination c;
      Rational total = 0;
      for (int i = 0; i < 2 * n; ++i) {
        const Rational w(static_cast<long>(1 + rng() % 5));
        c.entries.push_back({w, GreedyExtremeBase(f, RandomOrdering(n, rng))});
        total += w;
      }
      for (auto& e : c.entries) e.lambda /= total;
      c.x = c.Sum();
      const ConvexCombination r = ReduceCombination(c);
      EXPECT_EQ(r.x, c.x);
      EXPECT_EQ(r.Sum(), c.x);
      EXPECT_LE(r.size(), n);
      EXPECT_NO_THROW(r.CheckInvariants());
      for (const auto& e : r.entries) EXPECT_GT(e.lambda, 0);
    }
  }
}

}  // namespace
}  // namespace sfm
