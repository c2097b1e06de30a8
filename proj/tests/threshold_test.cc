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

#include "bfm/threshold.h"

#include "bfm/errors.h"
#include "bfm/knapsack_mech.h"
#include "bfm/submodular_mech.h"
#include "fixtures.h"
#include "gtest/gtest.h"

namespace bfm {
namespace {

using testing::K1;

// Wins iff bid <= t.
AllocationRule StepRule(AgentId agent, Num t) {
  return [agent, t](const BidProfile& bids) -> AgentSet {
    if (bids[agent] <= t) return {agent};
    return {};
  };
}

TEST(ThresholdPayment, RecoversRationalStep) {
  const BidProfile bids({Num(1), Num(0)});
  const ThresholdResult r = ThresholdPayment(StepRule(0, Num(37) / 7), bids, 0, Num(10));
  EXPECT_EQ(r.kind, ThresholdResult::Kind::kThreshold);
  EXPECT_LE(r.lo, Num(37) / 7);
  EXPECT_GE(r.hi, Num(37) / 7);
  EXPECT_LE(r.hi - r.lo, ScaleByPow2(Num(10), 60));
  ASSERT_TRUE(r.exact.has_value());
  EXPECT_EQ(*r.exact, Num(37) / 7);
  EXPECT_EQ(r.iterations, kBisectionIterations);
}

TEST(ThresholdPayment, AlwaysAndNever) {
  const BidProfile bids({Num(1)});
  const ThresholdResult always = ThresholdPayment(StepRule(0, Num(20)), bids, 0, Num(10));
  EXPECT_EQ(always.kind, ThresholdResult::Kind::kAlwaysWins);
  EXPECT_EQ(always.Payment(), 10);
  const AllocationRule never = [](const BidProfile&) { return AgentSet{}; };
  const ThresholdResult none = ThresholdPayment(never, bids, 0, Num(10));
  EXPECT_EQ(none.kind, ThresholdResult::Kind::kNeverWins);
  EXPECT_EQ(none.Payment(), 0);
}

TEST(ThresholdPayment, InvertedRuleIsAViolation) {
  const AllocationRule inverted = [](const BidProfile& b) -> AgentSet {
    if (b[0] >= 5) return {0};
    return {};
  };
  EXPECT_THROW(ThresholdPayment(inverted, BidProfile({Num(6)}), 0, Num(10)),
               PropertyViolation);
}

TEST(ThresholdPayment, GreKnapsackAgent0OnK1) {
  const Instance k1 = K1();
  const ThresholdResult r =
      ThresholdPayment(GreKnapsackRule(k1), BidProfile::Truthful(k1), 0, k1.budget());
  EXPECT_EQ(r.Payment(), Num(60) / 11);
}

TEST(ThresholdPayment, MechKnapsackAgent1OnK1NeverWins) {
  const Instance k1 = K1();
  const ThresholdResult r =
      ThresholdPayment(MechKnapsackRule(k1), BidProfile::Truthful(k1), 1, k1.budget());
  EXPECT_EQ(r.kind, ThresholdResult::Kind::kNeverWins);
}

TEST(ThresholdPayment, SingleAgentGreedyHalfBudget) {
  const Instance one = testing::AdditiveInstance("8", {"3"}, {"1"});
  const ThresholdResult r =
      ThresholdPayment(GreedySmRule(one), BidProfile::Truthful(one), 0, one.budget());
  EXPECT_EQ(r.Payment(), 4);
}

TEST(ThresholdPayments, ThrowsForAWinnerThatNeverWins) {
  const AllocationRule never = [](const BidProfile&) { return AgentSet{}; };
  EXPECT_THROW(ThresholdPayments(never, BidProfile({Num(1)}), {0}, Num(10)),
               PropertyViolation);
}

}  // namespace
}  // namespace bfm
