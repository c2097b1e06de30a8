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

#ifndef BFM_KNAPSACK_MECH_H_
#define BFM_KNAPSACK_MECH_H_

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bfm/model.h"
#include "bfm/num.h"
#include "bfm/threshold.h"

namespace bfm {

// Additive agents sorted by v_i / b_i descending; zero bids first, ties by id.
std::vector<AgentId> KnapsackRatioOrder(std::span<const Num> values,
                                        const BidProfile& bids,
                                        std::span<const AgentId> candidates);

struct GreKnapsackResult {
  std::vector<AgentId> order;
  AgentSet winners;
  std::optional<AgentId> stop_item;  // first agent failing the condition
};

// Greedy over the eligible agents with the full budget: take order[k] while
//   b_k * (sum of v over S and k) <= B * v_k.
GreKnapsackResult GreKnapsack(const Instance& instance, const BidProfile& bids);

struct KnapsackFractionalOpt {
  Num value;
  std::map<AgentId, Num> fractions;  // every candidate, in [0,1]
  std::optional<AgentId> split_agent;
};

KnapsackFractionalOpt FoptKnapsack(std::span<const Num> values,
                                   const BidProfile& bids,
                                   std::span<const AgentId> candidates,
                                   const Num& budget);

enum class PaymentContext {
  // gre on its own (the randomized mechanism's greedy branch).
  kGreedyAlone,
  // gre inside the deterministic mechanism after its singleton test failed;
  // adds the q_i term for winners other than i*.
  kMechKnapsackBranch,
};

// p_i = min{v_i c_{k+1} / v_{k+1}, B v_i / v(S), q_i}. The first term is
// dropped without a stop item, the last outside kMechKnapsackBranch and for
// i*. Throws ContractViolation unless (winners, stop_item) is gre's output
// and, for kMechKnapsackBranch, the singleton test actually fails.
std::map<AgentId, Num> KnapsackPaymentFormula(const Instance& instance,
                                              const BidProfile& bids,
                                              const AgentSet& winners,
                                              std::optional<AgentId> stop_item,
                                              PaymentContext context);

AllocationRule GreKnapsackRule(const Instance& instance);
AllocationRule MechKnapsackRule(const Instance& instance);

// {i*} paid B if (1+sqrt2) v(i*) >= fopt(A - i*), else gre with the formula.
Outcome MechKnapsack(const Instance& instance, const BidProfile& bids);
// 1/3: {i*} paid B; 2/3: gre with its threshold payments.
RandomizedOutcome RmKnapsack(const Instance& instance, const BidProfile& bids);

}  // namespace bfm

#endif  // BFM_KNAPSACK_MECH_H_
