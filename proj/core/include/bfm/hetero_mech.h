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

#ifndef BFM_HETERO_MECH_H_
#define BFM_HETERO_MECH_H_

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bfm/model.h"
#include "bfm/num.h"
#include "bfm/real.h"
#include "bfm/threshold.h"

namespace bfm {

// Knapsack with item types: a feasible selection holds at most one item of
// each type. Every type implicitly owns a virtual item with cost 0, value 0.
struct HeteroItem {
  AgentId id = 0;
  Num cost;
  Num value;
  int type = 0;
};

class HeteroInstance {
 public:
  // Throws InputError unless budget > 0, ids are 0..n-1 in order, costs and
  // values are nonnegative and types are nonnegative.
  HeteroInstance(Num budget, std::vector<HeteroItem> items);

  const Num& budget() const { return budget_; }
  std::span<const HeteroItem> items() const { return items_; }
  const HeteroItem& item(AgentId id) const { return items_.at(id); }
  int size() const { return static_cast<int>(items_.size()); }
  int num_types() const;
  std::vector<Num> costs() const;
  Num Value(std::span<const AgentId> set) const;
  // At most one item per type.
  bool IsTypeFeasible(std::span<const AgentId> set) const;

 private:
  Num budget_;
  std::vector<HeteroItem> items_;
};

// The additive knapsack as a heterogeneous instance with one type per agent.
HeteroInstance AsHetero(const Instance& additive);

inline constexpr AgentId kVirtualItem = -1;

// Slope of a hull segment; cost-0 items with positive value get +inf.
struct Tangent {
  bool infinite = false;
  Num slope;

  friend std::strong_ordering operator<=>(const Tangent& a, const Tangent& b);
  friend bool operator==(const Tangent& a, const Tangent& b) = default;
};

// One vertex of a type's upper-left hull, with the segment that reaches it.
struct ChainLink {
  AgentId item = 0;
  int type = 0;
  AgentId previous = kVirtualItem;  // hull predecessor (last[t] when reached)
  Num reduced_cost;                 // c(item) - c(previous)
  Num reduced_value;                // v(item) - v(previous)
  Tangent tangent;
};

struct HullChain {
  // Per type: hull vertices from the origin to the max-value item, with
  // strictly increasing cost and strictly decreasing tangent.
  std::map<int, std::vector<ChainLink>> per_type;
  // All links sorted by tangent descending, ties by (type, item id).
  std::vector<ChainLink> global_order;
};

HullChain BuildHullChains(const HeteroInstance& instance, const BidProfile& bids,
                          std::span<const AgentId> candidates);

// Fractional solution: alpha_i in [0,1], per-type sums <= 1, spend <= B.
struct FractionalSolution {
  std::map<AgentId, Num> alpha;
  Num value;
  Num spend;
};

// Optimal fractional solution over the candidates. Walks the global hull
// order paying only the reduced cost c_k - c(last[t_k]) for an upgrade.
FractionalSolution Fhk(const HeteroInstance& instance, const BidProfile& bids,
                       std::span<const AgentId> candidates, const Num& budget);

struct GreHResult {
  std::vector<ChainLink> order;
  AgentSet winners;
  // For each winner, the item of its type it displaced (kVirtualItem if none).
  std::map<AgentId, AgentId> replaced;
  std::optional<AgentId> stop_item;
};

// Greedy with deletions over the eligible items (bid <= B): walk the global
// hull order and upgrade type t_k to item k while
//   c(k) - c(last) <= B * (v(k) - v(last)) / (v(k) - v(last) + v(S)).
GreHResult GreH(const HeteroInstance& instance, const BidProfile& bids);

// Eligible item with the largest value, ties by smallest id.
std::optional<AgentId> BestHeteroItem(const HeteroInstance& instance,
                                      std::span<const AgentId> candidates);

Real OnePlusSqrt2();

AllocationRule GreHRule(const HeteroInstance& instance);
AllocationRule MhkRule(const HeteroInstance& instance);

// Deterministic: {i*} with payment B if (1+sqrt2) v(i*) >= fhk(A - i*),
// otherwise gre_h with bisection threshold payments of this rule.
Outcome Mhk(const HeteroInstance& instance, const BidProfile& bids);
// 1/3: {i*} paid B; 2/3: gre_h with its own threshold payments.
RandomizedOutcome Rmhk(const HeteroInstance& instance, const BidProfile& bids);

}  // namespace bfm

#endif  // BFM_HETERO_MECH_H_
