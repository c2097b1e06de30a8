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

#include "bfm/adversarial.h"

#include "bfm/errors.h"
#include "bfm/knapsack_mech.h"
#include "bfm/submodular_mech.h"
#include "fixtures.h"
#include "gtest/gtest.h"

namespace bfm {
namespace {

using testing::Q;

const QuadraticSurd kOnePlusRoot2(Num(1), Num(1));

TEST(QuadraticSurd, Arithmetic) {
  const QuadraticSurd r2 = QuadraticSurd::Sqrt2();
  EXPECT_EQ(kOnePlusRoot2 * (r2 - Num(1)), QuadraticSurd(Num(1)));
  EXPECT_EQ(r2 * r2, QuadraticSurd(Num(2)));
  EXPECT_EQ(kOnePlusRoot2 / r2, QuadraticSurd(Num(1), Num(1) / 2));
  EXPECT_EQ((QuadraticSurd(Num(3), Num(-2)) / QuadraticSurd(Num(3), Num(-2))),
            QuadraticSurd(Num(1)));
  EXPECT_THROW(r2 / QuadraticSurd(Num(0)), ContractViolation);
}

TEST(QuadraticSurd, SignAndOrder) {
  EXPECT_EQ(QuadraticSurd(Num(3), Num(-2)).Sign(), 1);
  EXPECT_EQ(QuadraticSurd(Num(-3), Num(2)).Sign(), -1);
  EXPECT_EQ(QuadraticSurd(Num(0), Num(0)).Sign(), 0);
  // 99/70 is a convergent just above sqrt(2).
  EXPECT_TRUE(QuadraticSurd::Sqrt2() < QuadraticSurd(Num(99) / 70, Num(0)));
  EXPECT_TRUE(QuadraticSurd::Sqrt2() > QuadraticSurd(Num(140) / 99, Num(0)));
}

TEST(QuadraticSurd, ToStringAndReal) {
  EXPECT_EQ(kOnePlusRoot2.ToString(), "1 + 1*sqrt2");
  EXPECT_TRUE(Compare(Q("2.4142135"), kOnePlusRoot2.ToReal()) < 0);
  EXPECT_TRUE(Compare(Q("2.4142136"), kOnePlusRoot2.ToReal()) > 0);
}

TEST(Sqrt2Shadow, IsAVeryCloseConvergent) {
  const Num& s = Sqrt2Shadow();
  EXPECT_GT(s.get_den(), mpz_class("100000000000000000000000"));
  const Num eps = Q("1/10000000000000000000000000000000000000000");
  EXPECT_TRUE(Compare(s - eps, Real::Sqrt2()) < 0);
  EXPECT_TRUE(Compare(s + eps, Real::Sqrt2()) > 0);
}

TEST(Lb3Family, Shape) {
  const std::vector<Lb3Point> pts = Lb3Family(16);
  EXPECT_EQ(pts.size(), 2u * 16 * 17 + 1);
  int corner = 0;
  for (const Lb3Point& p : pts) {
    if (p.region == 1) {
      EXPECT_EQ(p.c3, Num(7) / 10);
      EXPECT_GT(p.c2, Num(1) / 5);
      EXPECT_LT(p.c2, Num(3) / 10);
    } else if (p.region == 2) {
      EXPECT_EQ(p.c2, Num(7) / 10);
    } else {
      ++corner;
      EXPECT_EQ(p.c1, Num(1) / 100);
    }
    EXPECT_GE(p.c1, 0);
    EXPECT_LE(p.c1, Num(11) / 10);
  }
  EXPECT_EQ(corner, 1);
  EXPECT_THROW(Lb3Family(15), InputError);
}

TEST(ProbeLb3, MechKnapsackPeaksAtOnePlusSqrt2) {
  const Lb3Report r = ProbeLb3(MechKnapsackRule, 16);
  EXPECT_FALSE(r.infinite);
  // Corner: opt = sqrt2 + 2 while the mechanism keeps only item 1.
  EXPECT_EQ(r.max_ratio, kOnePlusRoot2);
  EXPECT_EQ(r.points, 2 * 16 * 17 + 1);
  EXPECT_GT(r.lemma_points_region1, 0);
}

TEST(YaoDistribution, ProbabilitiesAndSupport) {
  const Num eps = Num(1) / 10;
  const WeightedInstanceFamily fam = YaoDistribution(5, eps, Num(1));
  // 4 type-1 instances and 6 pairs with i + j > 5.
  ASSERT_EQ(fam.members.size(), 10u);
  Num total = 0;
  for (const WeightedInstance& w : fam.members) total += w.probability;
  EXPECT_EQ(total, 1);
  EXPECT_EQ(fam.members[0].probability, (1 - eps) / 4);
  EXPECT_EQ(fam.members.back().probability, eps / 6);
  EXPECT_THROW(YaoDistribution(2, eps, Num(1)), InputError);
  EXPECT_THROW(YaoDistribution(5, Num(1), Num(1)), InputError);
}

TEST(YaoLowerBound, Value) {
  EXPECT_EQ(YaoLowerBound(100, Num(1) / 100), Num(99) / 50);
}

// Type 1 costs sum to B, so opt = 2 while every mechanism here keeps one
// item unless it can take both; type 2 has opt = 1.
TEST(ExpectedRatio, MechKnapsack) {
  for (int n : {5, 10, 100}) {
    const Num eps = Num(1) / 100;
    const ExpectedRatio r =
        ExpectedRatioUnderDistribution(MechKnapsackRule, YaoDistribution(n, eps, Num(1)));
    EXPECT_FALSE(r.infinite);
    EXPECT_EQ(r.value, 2 - eps) << n;
  }
}

TEST(ExpectedRatio, RmKnapsackBranches) {
  const int n = 100;
  const Num eps = Num(1) / 100;
  const WeightedInstanceFamily fam = YaoDistribution(n, eps, Num(1));
  EXPECT_EQ(ExpectedRatioUnderDistribution(BestSingletonRule, fam).value, 2 - eps);
  // gre takes both items only at k = n/2.
  const Num expected = (1 - eps) / (n - 1) * (2 * (n - 2) + 1) + eps;
  EXPECT_EQ(ExpectedRatioUnderDistribution(GreKnapsackRule, fam).value, expected);
  EXPECT_EQ(expected, Num(99) / 50);
}

}  // namespace
}  // namespace bfm
