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

#include "bfm/brute_force.h"

#include <random>

#include "bfm/errors.h"
#include "bfm/knapsack_mech.h"
#include "bfm/suite.h"
#include "fixtures.h"
#include "gtest/gtest.h"

namespace bfm {
namespace {

using testing::K1;

TEST(BruteForceOpt, K1) {
  const Instance k1 = K1();
  const OptResult r = BruteForceOpt(k1, BidProfile::Truthful(k1));
  EXPECT_EQ(r.value, 15);
  EXPECT_EQ(r.set, (AgentSet{0, 1, 2}));
}

TEST(BruteForceOpt, K1SmallBudget) {
  const Instance k1 = K1();
  const OptResult r = BruteForceOpt(k1.valuation(), BidProfile::Truthful(k1),
                                    AgentSet{0, 1, 2}, Num(4));
  EXPECT_EQ(r.value, 6);
  EXPECT_EQ(r.set, (AgentSet{0}));
}

TEST(BruteForceOpt, Empty) {
  const Instance k1 = K1();
  const OptResult r =
      BruteForceOpt(k1.valuation(), BidProfile::Truthful(k1), AgentSet{}, Num(4));
  EXPECT_EQ(r.value, 0);
  EXPECT_TRUE(r.set.empty());
}

TEST(BruteForceOpt, TiesGoToLexicographicallySmallestSet) {
  // {0, 2} and {1} both have value 2 and fit; {0, 2} is smaller.
  const Instance inst = testing::AdditiveInstance("2", {"1", "2", "1"}, {"1", "2", "1"});
  const OptResult r = BruteForceOpt(inst, BidProfile::Truthful(inst));
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.set, (AgentSet{0, 2}));
}

TEST(BruteForceOpt, RefusesTooMany) {
  const Valuation v = Valuation::Additive(std::vector<Num>(21, Num(1)));
  const BidProfile c(std::vector<Num>(21, Num(1)));
  AgentSet all;
  for (int i = 0; i < 21; ++i) all.push_back(i);
  EXPECT_THROW(BruteForceOpt(v, c, all, Num(5)), LimitError);
}

TEST(BruteForceOpt, HeteroRespectsTypes) {
  const HeteroInstance h1 = testing::H1("100");
  const OptResult r = BruteForceOpt(h1, BidProfile(h1.costs()));
  EXPECT_EQ(r.value, 9);
  EXPECT_EQ(r.set, (AgentSet{1, 2}));
}

// Plain mask enumeration as an independent reference.
Num MaskOpt(const Valuation& v, const BidProfile& c, int n, const Num& budget) {
  Num best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Num cost = 0;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) cost += c[i];
    }
    if (cost <= budget) best = Max(best, v.Evaluate(SetFromMask(mask)));
  }
  return best;
}

TEST(BruteForceOpt, MatchesMaskEnumerationOnSuites) {
  for (Family f : {Family::kAdditive, Family::kSubmodular}) {
    for (const NamedInstance& named : GenerateSuite(f, 3, 60)) {
      const Instance& inst = std::get<Instance>(named.instance);
      const BidProfile c = BidProfile::Truthful(inst);
      EXPECT_EQ(BruteForceOpt(inst, c).value,
                MaskOpt(inst.valuation(), c, inst.size(), inst.budget()))
          << named.id;
    }
  }
}

TEST(BruteForceOpt, FractionalOptIsAnUpperBound) {
  for (const NamedInstance& named : GenerateSuite(Family::kAdditive, 4, 100)) {
    const Instance& inst = std::get<Instance>(named.instance);
    const BidProfile c = BidProfile::Truthful(inst);
    const AgentSet all = Eligible(c, inst.budget());
    const KnapsackFractionalOpt f =
        FoptKnapsack(inst.valuation().additive_values(), c, all, inst.budget());
    const Num opt = BruteForceOpt(inst, c).value;
    EXPECT_GE(f.value, opt) << named.id;
    if (!f.split_agent) EXPECT_EQ(f.value, opt) << named.id;
  }
}

}  // namespace
}  // namespace bfm
