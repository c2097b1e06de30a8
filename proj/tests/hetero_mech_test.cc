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

#include "bfm/hetero_mech.h"

#include <vector>

#include "bfm/brute_force.h"
#include "bfm/errors.h"
#include "bfm/knapsack_mech.h"
#include "bfm/suite.h"
#include "fixtures.h"
#include "gtest/gtest.h"

namespace bfm {
namespace {

using testing::H1;
using testing::H2;
using testing::Q;

std::vector<AgentId> Items(const std::vector<ChainLink>& links) {
  std::vector<AgentId> out;
  for (const ChainLink& l : links) out.push_back(l.item);
  return out;
}

TEST(HeteroInstance, Validation) {
  EXPECT_THROW(HeteroInstance(Num(0), {{0, Num(1), Num(1), 0}}), InputError);
  EXPECT_THROW(HeteroInstance(Num(1), {{1, Num(1), Num(1), 0}}), InputError);
  EXPECT_THROW(HeteroInstance(Num(1), {{0, Num(-1), Num(1), 0}}), InputError);
  EXPECT_THROW(HeteroInstance(Num(1), {{0, Num(1), Num(1), -2}}), InputError);
  const HeteroInstance h = H1();
  EXPECT_EQ(h.num_types(), 2);
  EXPECT_TRUE(h.IsTypeFeasible(AgentSet{0, 2}));
  EXPECT_FALSE(h.IsTypeFeasible(AgentSet{0, 1}));
  EXPECT_EQ(h.Value(AgentSet{1, 2}), 9);
}

TEST(Tangent, InfiniteIsLargest) {
  const Tangent inf{true, Num(0)};
  const Tangent big{false, Num(1000)};
  EXPECT_TRUE(big < inf);
  EXPECT_TRUE((Tangent{false, Num(1)} < Tangent{false, Num(2)}));
}

TEST(BuildHullChains, H1) {
  const HeteroInstance h = H1();
  const HullChain chain = BuildHullChains(h, BidProfile(h.costs()), AgentSet{0, 1, 2});
  ASSERT_EQ(chain.per_type.at(0).size(), 2u);
  const ChainLink& up = chain.per_type.at(0)[1];
  EXPECT_EQ(up.item, 1);
  EXPECT_EQ(up.previous, 0);
  EXPECT_EQ(up.reduced_cost, 3);
  EXPECT_EQ(up.reduced_value, 2);
  EXPECT_EQ(up.tangent.slope, Num(2) / 3);
  EXPECT_EQ(Items(chain.global_order), (std::vector<AgentId>{0, 2, 1}));
}

TEST(BuildHullChains, DominatedItemIsSkipped) {
  // Item 1 lies under the segment from item 0 to item 2.
  const HeteroInstance h(Num(100), {{0, Num(1), Num(4), 0},
                                    {1, Num(2), Num(4), 0},
                                    {2, Num(3), Num(8), 0}});
  const HullChain chain = BuildHullChains(h, BidProfile(h.costs()), AgentSet{0, 1, 2});
  EXPECT_EQ(Items(chain.per_type.at(0)), (std::vector<AgentId>{0, 2}));
}

TEST(BuildHullChains, CollinearTieTakesFarthest) {
  const HeteroInstance h(Num(100), {{0, Num(1), Num(2), 0},
                                    {1, Num(2), Num(4), 0}});
  const HullChain chain = BuildHullChains(h, BidProfile(h.costs()), AgentSet{0, 1});
  EXPECT_EQ(Items(chain.per_type.at(0)), (std::vector<AgentId>{1}));
}

TEST(Fhk, H1) {
  const HeteroInstance h = H1();
  const FractionalSolution f = Fhk(h, BidProfile(h.costs()), AgentSet{0, 1, 2}, Num(6));
  // a1, then b1, then a third of the upgrade a1 -> a2.
  EXPECT_EQ(f.value, Num(23) / 3);
  EXPECT_EQ(f.spend, 6);
  EXPECT_EQ(f.alpha.at(1), Num(1) / 3);
  EXPECT_EQ(f.alpha.at(0), Num(2) / 3);
  EXPECT_EQ(f.alpha.at(2), 1);
  const HeteroInstance h85 = H1("8.5");
  EXPECT_EQ(Fhk(h85, BidProfile(h85.costs()), AgentSet{0, 1, 2}, Q("8.5")).value, 9);
}

TEST(Fhk, EqualsKnapsackRelaxationOnAdditive) {
  for (const NamedInstance& named : GenerateSuite(Family::kAdditive, 21, 150)) {
    const Instance& inst = std::get<Instance>(named.instance);
    const HeteroInstance h = AsHetero(inst);
    const BidProfile c = BidProfile::Truthful(inst);
    const AgentSet all = Eligible(c, inst.budget());
    EXPECT_EQ(Fhk(h, c, all, inst.budget()).value,
              FoptKnapsack(inst.valuation().additive_values(), c, all, inst.budget()).value)
        << named.id;
  }
}

TEST(Fhk, UpperBoundsIntegralOptimum) {
  for (const NamedInstance& named : GenerateSuite(Family::kHetero, 22, 150)) {
    const HeteroInstance& h = std::get<HeteroInstance>(named.instance);
    const BidProfile c(h.costs());
    const AgentSet all = Eligible(c, h.budget());
    EXPECT_GE(Fhk(h, c, all, h.budget()).value, BruteForceOpt(h, c).value) << named.id;
  }
}

TEST(GreH, H1) {
  const HeteroInstance h = H1();
  const GreHResult r = GreH(h, BidProfile(h.costs()));
  EXPECT_EQ(r.winners, (AgentSet{0}));
  EXPECT_EQ(r.stop_item, 2);
}

TEST(GreH, H2ReplacesWithinType) {
  const HeteroInstance h = H2();
  const GreHResult r = GreH(h, BidProfile(h.costs()));
  EXPECT_EQ(r.winners, (AgentSet{1, 2}));
  EXPECT_EQ(r.replaced.at(1), 0);
  EXPECT_EQ(r.replaced.at(2), kVirtualItem);
  EXPECT_FALSE(r.stop_item.has_value());
}

TEST(GreH, MatchesGreKnapsackWithOneTypePerAgent) {
  for (const NamedInstance& named : GenerateSuite(Family::kAdditive, 23, 150)) {
    const Instance& inst = std::get<Instance>(named.instance);
    const BidProfile c = BidProfile::Truthful(inst);
    EXPECT_EQ(GreH(AsHetero(inst), c).winners, GreKnapsack(inst, c).winners)
        << named.id;
  }
}

TEST(OnePlusSqrt2, Value) {
  EXPECT_TRUE(Compare(Q("2.41421356"), OnePlusSqrt2()) < 0);
  EXPECT_TRUE(Compare(Q("2.41421357"), OnePlusSqrt2()) > 0);
}

TEST(Mhk, H1AndH2) {
  const HeteroInstance h1 = H1();
  const Outcome o1 = Mhk(h1, BidProfile(h1.costs()));
  EXPECT_EQ(o1.winners, (AgentSet{1}));
  EXPECT_EQ(o1.payments.at(1), 6);
  const HeteroInstance h2 = H2();
  const Outcome o2 = Mhk(h2, BidProfile(h2.costs()));
  EXPECT_EQ(o2.winners, (AgentSet{1}));
  EXPECT_EQ(o2.payments.at(1), 10);
}

TEST(Rmhk, H1) {
  const HeteroInstance h = H1();
  const RandomizedOutcome r = Rmhk(h, BidProfile(h.costs()));
  ASSERT_EQ(r.branches().size(), 2u);
  EXPECT_EQ(r.branches()[0].probability, Num(1) / 3);
  EXPECT_EQ(r.ExpectedValue(), Num(14) / 3);
}

TEST(Mhk, BudgetFeasibleOnSuite) {
  for (const NamedInstance& named : GenerateSuite(Family::kHetero, 24, 60)) {
    const HeteroInstance& h = std::get<HeteroInstance>(named.instance);
    const BidProfile c(h.costs());
    const Outcome o = Mhk(h, c);
    EXPECT_LE(o.total_payment, h.budget()) << named.id;
    EXPECT_TRUE(IsIndividuallyRational(o, c)) << named.id;
    EXPECT_TRUE(h.IsTypeFeasible(o.winners)) << named.id;
  }
}

}  // namespace
}  // namespace bfm
