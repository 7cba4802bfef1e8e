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

#include <atomic>
#include <thread>

#include "sfm/errors.h"
#include "sfm/families.h"
#include "sfm/generators.h"
#include "sfm/oracle.h"
#include "sfm/rational.h"
#include "sfm/subset.h"
#include "test_util.h"

namespace sfm {
namespace {

using testing::AbTable;
using testing::Mask;
using testing::Q;
using testing::Qs;
using testing::SingleEdgeCut;
using testing::TableOracle;

TEST(RationalTest, ParsesAndFormatsInLowestTerms) {
  EXPECT_EQ(ParseRational("6/4"), Rational(3) / 2);
  EXPECT_EQ(FormatRational(ParseRational("6/4")), "3/2");
  EXPECT_EQ(FormatRational(ParseRational("-8/4")), "-2");
  EXPECT_EQ(FormatRational(ParseRational("+7")), "7");
  EXPECT_EQ(FormatRational(ParseRational("0/5")), "0");
}

TEST(RationalTest, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "a", "1/-2", "1.5", "--1", "1/", "/2"}) {
    EXPECT_THROW(ParseRational(bad), InputError) << bad;
  }
}

TEST(RationalTest, CeilLog2) {
  EXPECT_EQ(CeilLog2(Rational(1)), 0);
  EXPECT_EQ(CeilLog2(Rational(8)), 3);
  EXPECT_EQ(CeilLog2(Rational(9)), 4);
  EXPECT_EQ(CeilLog2(Q("1/3")), 0);
  EXPECT_THROW(CeilLog2(Rational(0)), InvalidArgumentError);
}

TEST(SubsetTest, MaskAndIndexFormsRoundTrip) {
  const Subset s = Subset::FromMask(10, 0b1000100101);
  EXPECT_EQ(s.Indices(), (std::vector<int>{0, 2, 5, 9}));
  EXPECT_EQ(Subset::FromIndices(10, s.Indices()), s);
  EXPECT_EQ(s.Mask(), 0b1000100101u);
  EXPECT_EQ(s.ToString(), "{0,2,5,9}");
  EXPECT_EQ(s.Count(), 4);
}

TEST(SubsetTest, LargeUniverseUsesIndexLists) {
  Subset s(130);
  s.Insert(129);
  s.Insert(3);
  s.Insert(64);
  EXPECT_EQ(s.Indices(), (std::vector<int>{3, 64, 129}));
  EXPECT_EQ(Subset::FromIndices(130, s.Indices()), s);
  EXPECT_EQ(s.Complement().Count(), 127);
  EXPECT_TRUE((s - s).Empty());
  EXPECT_THROW(s.Mask(), InvalidSubsetError);
}

TEST(SubsetTest, OutOfRangeElementsThrow) {
  Subset s(3);
  EXPECT_THROW(s.Insert(3), InvalidSubsetError);
  EXPECT_THROW(s.Contains(-1), InvalidSubsetError);
}

TEST(OracleTest, TableLookup) {
  const SetFunctionOracle f = AbTable();
  EXPECT_EQ(f.Evaluate(Mask(2, 0b01)), -1);
  EXPECT_EQ(f.Evaluate(Mask(2, 0b10)), 2);
  EXPECT_EQ(f.Evaluate(Mask(2, 0b11)), 1);
}

TEST(OracleTest, EmptySetIsNormalizedToZero) {
  const SetFunctionOracle f = TableOracle({"a", "b"}, {5, 4, 7, 6});
  EXPECT_EQ(f.Evaluate(Subset(2)), 0);
  EXPECT_EQ(f.Evaluate(Mask(2, 0b01)), -1);
  EXPECT_EQ(f.offset(), 5);
}

TEST(OracleTest, SingleEdgeCut) {
  const SetFunctionOracle f = SingleEdgeCut();
  EXPECT_EQ(f.Evaluate(Mask(2, 0b01)), 1);
  EXPECT_EQ(f.Evaluate(Mask(2, 0b10)), 1);
  EXPECT_EQ(f.Evaluate(Mask(2, 0b11)), 0);
}

TEST(OracleTest, ForeignSubsetThrows) {
  const SetFunctionOracle f = AbTable();
  EXPECT_THROW(f.Evaluate(Subset(3)), InvalidSubsetError);
}

TEST(OracleTest, CounterCountsEvaluationsWithoutCache) {
  const SetFunctionOracle f = AbTable({.cache = false});
  EXPECT_EQ(f.calls(), 0);
  for (int i = 0; i < 7; ++i) f.Evaluate(Mask(2, i % 4));
  EXPECT_EQ(f.calls(), 7);
}

TEST(OracleTest, CounterCountsOnlyCacheMisses) {
  const SetFunctionOracle f = AbTable();
  for (int i = 0; i < 12; ++i) f.Evaluate(Mask(2, i % 4));
  EXPECT_EQ(f.calls(), 4);
}

TEST(OracleTest, CacheEvictsLeastRecentlyUsed) {
  const SetFunctionOracle f =
      TableOracle({"a", "b"}, {0, -1, 2, 1}, {.cache = true, .cache_capacity = 2});
  f.Evaluate(Mask(2, 1));
  f.Evaluate(Mask(2, 2));
  f.Evaluate(Mask(2, 1));  // hit; 2 becomes least recent
  f.Evaluate(Mask(2, 3));  // evicts 2
  EXPECT_EQ(f.calls(), 3);
  f.Evaluate(Mask(2, 1));  // still cached
  EXPECT_EQ(f.calls(), 3);
  f.Evaluate(Mask(2, 2));  // miss
  EXPECT_EQ(f.calls(), 4);
}

TEST(OracleTest, ConcurrentReadsAgree) {
  const SetFunctionOracle f = MakeOracle(GenerateInstance("cut", 8, 3));
  std::vector<Rational> expected;
  for (uint64_t m = 0; m < 256; ++m) expected.push_back(f.Evaluate(Mask(8, m)));
  std::atomic<int> mismatches{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (int round = 0; round < 20; ++round) {
        for (uint64_t m = 0; m < 256; ++m) {
          const uint64_t mask = (m * (t + 3)) % 256;
          if (f.Evaluate(Mask(8, mask)) != expected[mask]) ++mismatches;
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(mismatches.load(), 0);
}

TEST(UpperBoundTest, SingleEdgeCut) {
  EXPECT_EQ(UpperBoundM(SingleEdgeCut(), LinearOrdering::Identity(2)), 2);
}

TEST(UpperBoundTest, ZeroFunction) {
  const SetFunctionOracle f = TableOracle({"a", "b"}, {0, 0, 0, 0});
  EXPECT_EQ(UpperBoundM(f, LinearOrdering::Identity(2)), 0);
  EXPECT_EQ(UpperBoundM(f, LinearOrdering({1, 0})), 0);
}

TEST(UpperBoundTest, AbTable) {
  EXPECT_EQ(UpperBoundM(AbTable(), LinearOrdering::Identity(2)), 2);
}

TEST(UpperBoundTest, BoundsEveryValue) {
  for (const auto& family : GeneratorFamilies()) {
    for (int seed = 0; seed < 6; ++seed) {
      const int n = 1 + (seed * 5) % 12;
      const SetFunctionOracle f = MakeOracle(GenerateInstance(family, n, seed));
      const Rational m = UpperBoundM(f, LinearOrdering::Identity(n));
      for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        ASSERT_LE(abs(f.Evaluate(Mask(n, mask))), m)
            << family << " n=" << n << " seed=" << seed;
      }
    }
  }
}

TEST(RestrictAboveTest, AbTableAboveB) {
  const SetFunctionOracle g = RestrictAbove(AbTable(), Mask(2, 0b10));
  ASSERT_EQ(g.size(), 1);
  EXPECT_EQ(g.ground().label(0), "a");
  EXPECT_EQ(g.Evaluate(Mask(1, 1)), -1);
  EXPECT_EQ(g.Evaluate(Mask(1, 0)), 0);
}

TEST(RestrictAboveTest, EmptyRestrictionKeepsValues) {
  const SetFunctionOracle f = AbTable();
  const SetFunctionOracle g = RestrictAbove(f, Subset(2));
  for (uint64_t m = 0; m < 4; ++m) {
    EXPECT_EQ(g.Evaluate(Mask(2, m)), f.Evaluate(Mask(2, m)));
  }
}

TEST(RestrictAboveTest, FullRestrictionIsEmptyGround) {
  const SetFunctionOracle g = RestrictAbove(AbTable(), Subset::Full(2));
  EXPECT_EQ(g.size(), 0);
  EXPECT_EQ(g.Evaluate(Subset(0)), 0);
}

TEST(RestrictAboveTest, SharesTheCallCounter) {
  const SetFunctionOracle f = AbTable({.cache = false});
  const SetFunctionOracle g = RestrictAbove(f, Mask(2, 0b10));
  const int64_t before = f.calls();
  g.Evaluate(Mask(1, 1));
  EXPECT_GT(f.calls(), before);
  EXPECT_EQ(g.calls(), f.calls());
}

TEST(RestrictAboveTest, PreservesSubmodularity) {
  for (const auto& family : GeneratorFamilies()) {
    for (int seed = 0; seed < 8; ++seed) {
      const int n = 2 + seed % 9;
      const SetFunctionOracle f = MakeOracle(GenerateInstance(family, n, seed));
      Subset r(n);
      for (int v = 0; v < n; v += 2 + seed % 2) r.Insert(v);
      EXPECT_FALSE(FindSubmodularityViolation(RestrictAbove(f, r)).has_value())
          << family << " seed " << seed;
    }
  }
}

TEST(ClampTopTest, PositiveTopIsLowered) {
  const auto [g, clamped] = ClampTop(AbTable());
  EXPECT_TRUE(clamped);
  EXPECT_EQ(g.Evaluate(Mask(2, 0b11)), 0);
  EXPECT_EQ(g.Evaluate(Mask(2, 0b10)), 2);
}

TEST(ClampTopTest, NegativeTopIsKept) {
  const auto [g, clamped] = ClampTop(TableOracle({"a", "b"}, {0, -1, -1, -3}));
  EXPECT_FALSE(clamped);
  EXPECT_EQ(g.Evaluate(Mask(2, 0b11)), -3);
}

TEST(ClampTopTest, ZeroTopIsKept) {
  const auto [g, clamped] = ClampTop(TableOracle({"a", "b"}, {0, -1, 2, 0}));
  EXPECT_FALSE(clamped);
  EXPECT_EQ(g.Evaluate(Mask(2, 0b11)), 0);
}

TEST(ClampTopTest, ResultStaysSubmodular) {
  for (int seed = 0; seed < 20; ++seed) {
    const SetFunctionOracle f = MakeOracle(GenerateInstance("table", 5, seed));
    EXPECT_FALSE(FindSubmodularityViolation(ClampTop(f).first).has_value());
  }
}

TEST(GroupViewTest, GroupsEvaluateAsUnions) {
  const SetFunctionOracle f = MakeOracle(GenerateInstance("coverage", 5, 4));
  const Subset base = Mask(5, 0b00001);
  const SetFunctionOracle g = GroupView(
      f, base, {Mask(5, 0b00110), Mask(5, 0b11000)}, GroundSet({"p", "q"}));
  EXPECT_EQ(g.Evaluate(Mask(2, 0b01)),
            f.Evaluate(Mask(5, 0b00111)) - f.Evaluate(base));
  EXPECT_EQ(g.Evaluate(Mask(2, 0b11)),
            f.Evaluate(Mask(5, 0b11111)) - f.Evaluate(base));
}

TEST(FamiliesTest, AllGeneratedFamiliesAreSubmodular) {
  for (const auto& family : GeneratorFamilies()) {
    for (int seed = 0; seed < 30; ++seed) {
      const int n = 1 + seed % 10;
      const Instance instance = GenerateInstance(family, n, seed);
      const auto fn = MakeSetFunction(instance.family);
      EXPECT_FALSE(FindSubmodularityViolation(*fn).has_value())
          << family << " n=" << n << " seed=" << seed;
    }
  }
}

TEST(FamiliesTest, LocalCheckAgreesWithPairwiseDefinition) {
  // Exhaustive X, Y check on small instances, including a broken one.
  auto pairwise_ok = [](const SetFunctionOracle& f) {
    const int n = f.size();
    for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
      for (uint64_t y = 0; y < (uint64_t{1} << n); ++y) {
        if (f.Evaluate(Mask(n, x)) + f.Evaluate(Mask(n, y)) <
            f.Evaluate(Mask(n, x | y)) + f.Evaluate(Mask(n, x & y))) {
          return false;
        }
      }
    }
    return true;
  };
  for (int seed = 0; seed < 10; ++seed) {
    const SetFunctionOracle f = MakeOracle(GenerateInstance("table", 4, seed));
    EXPECT_TRUE(pairwise_ok(f));
    EXPECT_FALSE(FindSubmodularityViolation(f).has_value());
  }
  const FunctionFamily broken = ExplicitTable{Qs({0, 1, 1, 3})};
  EXPECT_THROW(MakeSetFunction(broken), InvalidArgumentError);
}

TEST(FamiliesTest, NonSubmodularTableIsRejectedWithPair) {
  try {
    MakeOracle({GroundSet({"a", "b"}), ExplicitTable{Qs({0, 1, 1, 3})}});
    FAIL() << "expected a submodularity error";
  } catch (const InvalidArgumentError& e) {
    EXPECT_NE(std::string(e.what()).find("submodularity violated at ("),
              std::string::npos);
  }
}

TEST(FamiliesTest, CoverageValue) {
  CoverageSpec spec;
  spec.item_weights = Qs({3, 4});
  spec.covers = {{0}, {0, 1}};
  spec.costs = Qs({1, 5});
  const SetFunctionOracle f =
      MakeOracle({GroundSet({"a", "b"}), std::move(spec)});
  EXPECT_EQ(f.Evaluate(Mask(2, 0b01)), 3 - 1);
  EXPECT_EQ(f.Evaluate(Mask(2, 0b10)), 7 - 5);
  EXPECT_EQ(f.Evaluate(Mask(2, 0b11)), 7 - 6);
}

TEST(FamiliesTest, PartitionMatroidRank) {
  PartitionMatroidSpec spec;
  spec.n = 4;
  spec.blocks = {{0, 1, 2}, {3}};
  spec.caps = {2, 1};
  const SetFunctionOracle f = MakeOracle({GroundSet::Indexed(4), spec});
  EXPECT_EQ(f.Evaluate(Mask(4, 0b0111)), 2);
  EXPECT_EQ(f.Evaluate(Mask(4, 0b1111)), 3);
  EXPECT_EQ(f.Evaluate(Mask(4, 0b1001)), 2);
}

TEST(FamiliesTest, ConcaveCardinality) {
  ConcaveCardinalitySpec spec;
  spec.g = Qs({0, 5, 8, 9});
  spec.modular = Qs({-1, 0, -4});
  const SetFunctionOracle f = MakeOracle({GroundSet::Indexed(3), spec});
  EXPECT_EQ(f.Evaluate(Mask(3, 0b101)), 8 - 5);
  EXPECT_EQ(f.Evaluate(Mask(3, 0b111)), 9 - 5);
}

TEST(FamiliesTest, InvalidParametersAreRejected) {
  ConcaveCardinalitySpec convex;
  convex.g = Qs({0, 1, 3});
  EXPECT_THROW(MakeSetFunction(convex), InvalidArgumentError);
  CutFunctionSpec cut;
  cut.n = 2;
  cut.edges.push_back({0, 1, Rational(-1)});
  EXPECT_THROW(MakeSetFunction(cut), InvalidArgumentError);
  cut.edges[0] = {0, 2, Rational(1)};
  EXPECT_THROW(MakeSetFunction(cut), InvalidArgumentError);
}

TEST(GroundSetTest, DuplicateLabelsRejected) {
  EXPECT_THROW(GroundSet({"a", "a"}), InvalidArgumentError);
  EXPECT_EQ(GroundSet({"x", "y"}).IndexOf("y"), 1);
  EXPECT_FALSE(GroundSet({"x"}).IndexOf("z").has_value());
}

}  // namespace
}  // namespace sfm
