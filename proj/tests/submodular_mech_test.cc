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

#include "bfm/submodular_mech.h"

#include <vector>

#include "bfm/brute_force.h"
#include "bfm/suite.h"
#include "fixtures.h"
#include "gtest/gtest.h"

namespace bfm {
namespace {

using testing::K1;
using testing::Q;

// Straightforward greedy_sm with the candidates rescanned at each step.
AgentSet ReferenceGreedySm(const Instance& inst, const BidProfile& b,
                           const Num& cap) {
  std::vector<AgentId> left = Eligible(b, inst.budget());
  AgentSet taken;
  Num total = 0;
  while (!left.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < left.size(); ++k) {
      const Num mk = inst.valuation().Marginal(taken, left[k]);
      const Num mb = inst.valuation().Marginal(taken, left[best]);
      // mk / b_k > mb / b_best, zero bids as +inf.
      const Num lhs = mk * b[left[best]];
      const Num rhs = mb * b[left[k]];
      if (lhs > rhs) best = k;
    }
    const AgentId j = left[best];
    const Num m = inst.valuation().Marginal(taken, j);
    if (b[j] * (total + m) > cap * m || (m == 0 && b[j] > 0)) break;
    total += m;
    taken.push_back(j);
    left.erase(left.begin() + best);
  }
  return MakeAgentSet(taken);
}

TEST(GreedyOrder, CoverageMarginals) {
  const Instance inst = testing::CoverageInstance();
  const GreedyTrace t =
      GreedyOrder(inst.valuation(), BidProfile::Truthful(inst), AgentSet{0, 1, 2});
  EXPECT_EQ(t.order, (std::vector<AgentId>{0, 1, 2}));
  EXPECT_EQ(t.marginals, (std::vector<Num>{Num(2), Num(1), Num(0)}));
}

TEST(GreedyOrder, ZeroBidsFirstThenSmallerId) {
  const Instance inst = testing::AdditiveInstance("10", {"1", "4", "2", "1"},
                                                  {"1", "2", "1", "0"});
  const GreedyTrace t =
      GreedyOrder(inst.valuation(), BidProfile::Truthful(inst), AgentSet{0, 1, 2, 3});
  EXPECT_EQ(t.order, (std::vector<AgentId>{3, 1, 2, 0}));
}

TEST(GreedySm, K1HalfBudget) {
  const Instance k1 = K1();
  const GreedyTrace t = GreedySm(k1, BidProfile::Truthful(k1), Num(5));
  EXPECT_EQ(t.winners, (AgentSet{0}));
  EXPECT_EQ(t.stop_index, 1u);
}

TEST(GreedySm, CoverageStopsAfterFirst) {
  const Instance inst = testing::CoverageInstance();
  // 1 <= (3/2) * 1 / 3 fails for the second agent.
  const GreedyTrace t = GreedySm(inst, BidProfile::Truthful(inst), Num(3) / 2);
  EXPECT_EQ(t.winners, (AgentSet{0}));
}

TEST(GreedySm, MatchesReferenceOnSuites) {
  for (Family f : {Family::kAdditive, Family::kSubmodular}) {
    for (const NamedInstance& named : GenerateSuite(f, 11, 150)) {
      const Instance& inst = std::get<Instance>(named.instance);
      const BidProfile b = BidProfile::Truthful(inst);
      const Num cap = inst.budget() / 2;
      EXPECT_EQ(GreedySm(inst, b, cap).winners, ReferenceGreedySm(inst, b, cap))
          << named.id;
    }
  }
}

TEST(FractionalGreedySm, K1) {
  const Instance k1 = K1();
  const FractionalGreedyResult full = FractionalGreedySm(k1, BidProfile::Truthful(k1));
  EXPECT_EQ(full.ell, 3u);
  EXPECT_EQ(full.total, 15);
  const Instance k1_8 = K1("8");
  const FractionalGreedyResult r = FractionalGreedySm(k1_8, BidProfile::Truthful(k1_8));
  EXPECT_EQ(r.ell, 2u);
  EXPECT_EQ(r.integral_value, 11);
  EXPECT_EQ(r.frac_cost, 3);
  EXPECT_EQ(r.frac_value, Num(12) / 5);
  EXPECT_EQ(r.total, Num(67) / 5);
}

TEST(BestSingleton, TiesToSmallestId) {
  const Instance inst = testing::AdditiveInstance("10", {"3", "5", "5"},
                                                  {"1", "1", "1"});
  EXPECT_EQ(BestSingleton(inst.valuation(), AgentSet{0, 1, 2}), 1);
  EXPECT_EQ(BestSingleton(inst.valuation(), AgentSet{2, 0}), 2);
  EXPECT_FALSE(BestSingleton(inst.valuation(), AgentSet{}).has_value());
}

TEST(DetMechSmFactor, Value) {
  // (1 + 4e + sqrt(1 + 24 e^2)) / (2 (e - 1)) = 7.34088...
  const Real x = DetMechSmFactor();
  EXPECT_TRUE(Compare(Q("7.3408"), x) < 0);
  EXPECT_TRUE(Compare(Q("7.3409"), x) > 0);
}

TEST(RandomMechSm, K1Branches) {
  const Instance k1 = K1();
  const RandomizedOutcome r = RandomMechSm(k1, BidProfile::Truthful(k1));
  ASSERT_EQ(r.branches().size(), 2u);
  EXPECT_EQ(r.branches()[0].probability, Num(2) / 5);
  EXPECT_EQ(r.branches()[0].outcome.winners, (AgentSet{0}));
  EXPECT_EQ(r.branches()[0].outcome.payments.at(0), 10);
  EXPECT_EQ(r.branches()[1].probability, Num(3) / 5);
  EXPECT_EQ(r.branches()[1].outcome.winners, (AgentSet{0}));
  // Agent 0 stays first in the greedy order up to bid 18/5 and then no
  // longer fits behind agent 1.
  EXPECT_EQ(r.branches()[1].outcome.payments.at(0), Num(18) / 5);
  EXPECT_EQ(r.ExpectedValue(), 6);
  EXPECT_EQ(r.ExpectedPayment(), Num(154) / 25);
}

TEST(DetMechSm, K1TakesSingleton) {
  const Instance k1 = K1();
  const Outcome o = DetMechSm(k1, BidProfile::Truthful(k1), BruteForceOracle());
  EXPECT_EQ(o.winners, (AgentSet{0}));
  EXPECT_EQ(o.payments.at(0), 10);
}

TEST(DetMechSm, ManySmallAgentsUseGreedy) {
  std::vector<std::string> values(20, "1"), costs(20, "1/10");
  const Instance inst = testing::AdditiveInstance("2", values, costs);
  const BidProfile b = BidProfile::Truthful(inst);
  const Outcome o = DetMechSm(inst, b, BruteForceOracle());
  // 1/10 <= 1 * 1 / k allows k <= 10 agents.
  EXPECT_EQ(o.winners.size(), 10u);
  EXPECT_EQ(o.value, 10);
  EXPECT_TRUE(IsIndividuallyRational(o, b));
  EXPECT_LE(o.total_payment, inst.budget());
}

TEST(DetMechSm, AgreesWithItsRule) {
  for (const NamedInstance& named : GenerateSuite(Family::kSubmodular, 5, 40)) {
    const Instance& inst = std::get<Instance>(named.instance);
    const BidProfile b = BidProfile::Truthful(inst);
    const Outcome o = DetMechSm(inst, b, BruteForceOracle());
    EXPECT_EQ(o.winners, DetMechSmRule(inst, BruteForceOracle())(b)) << named.id;
    EXPECT_LE(o.total_payment, inst.budget()) << named.id;
    EXPECT_TRUE(IsIndividuallyRational(o, b)) << named.id;
  }
}

}  // namespace
}  // namespace bfm
