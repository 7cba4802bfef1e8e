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
#include <optional>

#include "sfm/errors.h"
#include "sfm/generators.h"
#include "sfm/scaling.h"
#include "sfm/verify.h"
#include "test_util.h"

namespace sfm {
namespace {

using testing::AbTable;
using testing::Mask;
using testing::ModularOracle;
using testing::Qs;
using testing::SingleEdgeCut;
using testing::TableOracle;

TEST(BruteForceTest, AbTable) {
  const BruteForceResult r = BruteForceMin(AbTable());
  EXPECT_EQ(r.minimizer, Mask(2, 0b01));
  EXPECT_EQ(r.value, -1);
  EXPECT_EQ(r.all_minimizers, (std::vector<Subset>{Mask(2, 0b01)}));
}

TEST(BruteForceTest, ZeroFunctionHasEveryMinimizer) {
  const BruteForceResult r = BruteForceMin(TableOracle({"a", "b"}, {0, 0, 0, 0}));
  EXPECT_TRUE(r.minimizer.Empty());
  EXPECT_EQ(r.value, 0);
  EXPECT_EQ(r.all_minimizers.size(), 4u);
}

TEST(BruteForceTest, NegativeCardinality) {
  const BruteForceResult r = BruteForceMin(ModularOracle(Qs({-1, -1, -1})));
  EXPECT_EQ(r.minimizer, Subset::Full(3));
  EXPECT_EQ(r.value, -3);
  EXPECT_EQ(r.all_minimizers.size(), 1u);
}

TEST(BruteForceTest, RefusesLargeGroundSets) {
  const SetFunctionOracle f = ModularOracle(std::vector<Rational>(25, Rational(1)));
  EXPECT_THROW(BruteForceMin(f), InvalidArgumentError);
}

TEST(BruteForceTest, InvariantUnderLabelPermutation) {
  for (int seed = 0; seed < 10; ++seed) {
    const int n = 5;
    const Instance instance = GenerateInstance("table", n, seed);
    const auto& values = std::get<ExplicitTable>(instance.family).values;
    const std::vector<int> perm = {3, 0, 4, 1, 2};  // element v moves to perm[v]
    ExplicitTable permuted;
    permuted.values.resize(values.size());
    for (uint64_t m = 0; m < values.size(); ++m) {
      uint64_t image = 0;
      for (int v = 0; v < n; ++v) {
        if (m >> v & 1) image |= uint64_t{1} << perm[v];
      }
      permuted.values[image] = values[m];
    }
    const BruteForceResult r1 = BruteForceMin(MakeOracle(instance));
    const BruteForceResult r2 =
        BruteForceMin(MakeOracle({GroundSet::Indexed(n), permuted}));
    EXPECT_EQ(r1.value, r2.value);
    ASSERT_EQ(r1.all_minimizers.size(), r2.all_minimizers.size());
    for (const auto& x : r1.all_minimizers) {
      Subset image(n);
      for (int v : x.Indices()) image.Insert(perm[v]);
      EXPECT_NE(std::find(r2.all_minimizers.begin(), r2.all_minimizers.end(),
                          image),
                r2.all_minimizers.end());
    }
  }
}

class CertificateTest : public ::testing::Test {
 protected:
  void SetUp() override {
    f_.emplace(MakeOracle(GenerateInstance("coverage", 6, 3)));
    const SfmResult r = Sfm(*f_);
    ASSERT_TRUE(r.certificate.has_value());
    certificate_ = *r.certificate;
    ASSERT_GE(certificate_.bases.size(), 2u);
  }

  std::string FailedClause(const Certificate& c) {
    const CertificateReport report = CheckCertificate(*f_, c);
    return report.ok ? "pass" : report.failed_clause;
  }

  std::optional<SetFunctionOracle> f_;
  Certificate certificate_;
};

TEST_F(CertificateTest, SolverOutputPasses) {
  EXPECT_EQ(FailedClause(certificate_), "pass");
}

TEST_F(CertificateTest, NegatedLambdaFailsPositivity) {
  certificate_.lambda[1] = -certificate_.lambda[1];
  EXPECT_EQ(FailedClause(certificate_), "positivity");
}

TEST_F(CertificateTest, PerturbedBaseFailsGreedy) {
  certificate_.bases[0].y[2] += 1;
  EXPECT_EQ(FailedClause(certificate_), "greedy");
}

TEST_F(CertificateTest, WeightsMustSumToOne) {
  certificate_.lambda[0] *= 2;
  EXPECT_EQ(FailedClause(certificate_), "sum");
}

TEST_F(CertificateTest, OrderingMustBePermutation) {
  certificate_.bases[1].ordering[2] = certificate_.bases[1].ordering[0];
  EXPECT_EQ(FailedClause(certificate_), "ordering");
}

TEST_F(CertificateTest, FlowMustBeSkewSymmetric) {
  certificate_.phi[2][4] += 1;
  EXPECT_EQ(FailedClause(certificate_), "skew");
}

TEST_F(CertificateTest, ClaimedGapMustMatch) {
  certificate_.gap -= 1;
  EXPECT_EQ(FailedClause(certificate_), "gap");
}

TEST_F(CertificateTest, ShapeMismatch) {
  certificate_.bases.pop_back();
  EXPECT_EQ(FailedClause(certificate_), "shape");
}

TEST_F(CertificateTest, NonMinimalSetFailsBound) {
  const BruteForceResult brute = BruteForceMin(*f_);
  for (uint64_t m = 0; m < 64; ++m) {
    const Subset x = Mask(6, m);
    const Rational value = f_->Evaluate(x);
    if (value == brute.value) continue;
    certificate_.gap += value - f_->Evaluate(certificate_.minimizer);
    certificate_.minimizer = x;
    EXPECT_EQ(FailedClause(certificate_), "bound");
    return;
  }
  FAIL() << "instance is constant";
}

TEST(ExchangeBruteForceTest, SingleEdgeCut) {
  EXPECT_EQ(ExchangeCapacityBruteForce(SingleEdgeCut(), Qs({1, -1}), 1, 0), 2);
}

TEST(ExchangeBruteForceTest, ModularHasZeroCapacity) {
  const SetFunctionOracle f = ModularOracle(Qs({2, -1, 4}));
  for (int u = 0; u < 3; ++u) {
    for (int v = 0; v < 3; ++v) {
      if (u != v) EXPECT_EQ(ExchangeCapacityBruteForce(f, Qs({2, -1, 4}), u, v), 0);
    }
  }
}

TEST(ExchangeBruteForceTest, RejectsBadArguments) {
  const SetFunctionOracle f = SingleEdgeCut();
  EXPECT_THROW(ExchangeCapacityBruteForce(f, Qs({2, -1}), 1, 0),
               InvalidArgumentError);  // y(a) > f({a})
  EXPECT_THROW(ExchangeCapacityBruteForce(f, Qs({1, -1}), 1, 1),
               InvalidArgumentError);
  const SetFunctionOracle big =
      ModularOracle(std::vector<Rational>(17, Rational(0)));
  EXPECT_THROW(ExchangeCapacityBruteForce(big, std::vector<Rational>(17), 0, 1),
               InvalidArgumentError);
}

TEST(BasePolyhedronTest, Membership) {
  const SetFunctionOracle f = SingleEdgeCut();
  EXPECT_TRUE(InBasePolyhedron(f, Qs({1, -1})));
  EXPECT_TRUE(InBasePolyhedron(f, Qs({0, 0})));
  EXPECT_FALSE(InBasePolyhedron(f, Qs({2, -2})));
  EXPECT_FALSE(InBasePolyhedron(f, Qs({0, 1})));
}

}  // namespace
}  // namespace sfm
