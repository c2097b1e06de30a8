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

#ifndef BFM_SUBMODULAR_MECH_H_
#define BFM_SUBMODULAR_MECH_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bfm/model.h"
#include "bfm/num.h"
#include "bfm/real.h"
#include "bfm/threshold.h"

namespace bfm {

// Greedy order by marginal value per unit bid. order[k] maximizes
// m_{S_k}(j) / b_j over the remaining agents, where S_k = order[0..k).
// Zero bids count as ratio +inf; ties go to the smaller id.
struct GreedyTrace {
  std::vector<AgentId> order;
  std::vector<Num> marginals;   // marginals[k] = m_{S_k}(order[k])
  AgentSet winners;             // a prefix of order
  std::size_t stop_index = 0;   // first rejected position, or order.size()
};

GreedyTrace GreedyOrder(const Valuation& valuation, const BidProfile& bids,
                        std::span<const AgentId> candidates);

// GreedySM over the eligible agents: take order[k] while
//   b_k <= budget_cap * m_k / (sum of m over S and k).
// Mechanisms pass budget_cap = B / 2.
GreedyTrace GreedySm(const Instance& instance, const BidProfile& bids,
                     const Num& budget_cap);

struct FractionalGreedyResult {
  std::size_t ell = 0;  // number of greedy agents fitting entirely in B
  Num integral_value;   // sum of their marginals
  Num frac_cost;        // leftover budget spent on agent ell+1
  Num frac_value;       // its prorated marginal
  Num total;            // fgre(A)
};

FractionalGreedyResult FractionalGreedySm(const Instance& instance,
                                          const BidProfile& bids);

// Candidate with the largest singleton value, ties by smallest id.
std::optional<AgentId> BestSingleton(const Valuation& valuation,
                                     std::span<const AgentId> candidates);

// opt(candidates, budget) under the given costs.
using OptOracle = std::function<Num(const Valuation&, const BidProfile&,
                                    std::span<const AgentId>, const Num&)>;

// Exhaustive-enumeration oracle (at most 20 candidates).
OptOracle BruteForceOracle();

// x = (1 + 4e + sqrt(1 + 24e^2)) / (2(e - 1)) ~ 7.3409.
Real DetMechSmFactor();

// greedy_sm(A, B/2) as an allocation rule, A = agents bidding <= B.
AllocationRule GreedySmRule(const Instance& instance);
// The {i*} rule shared by every randomized mechanism.
AllocationRule BestSingletonRule(const Instance& instance);
AllocationRule DetMechSmRule(const Instance& instance, OptOracle oracle);

// 2/5: {i*} paid B; 3/5: greedy_sm(A, B/2) with bisection threshold payments.
RandomizedOutcome RandomMechSm(const Instance& instance, const BidProfile& bids);

// {i*} paid B if x v(i*) >= opt(A - i*, B); otherwise greedy_sm(A, B/2) with
// threshold payments of the combined rule.
Outcome DetMechSm(const Instance& instance, const BidProfile& bids,
                  const OptOracle& oracle);

}  // namespace bfm

#endif  // BFM_SUBMODULAR_MECH_H_
