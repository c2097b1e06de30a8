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

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "bfm/errors.h"

namespace bfm {

HeteroInstance::HeteroInstance(Num budget, std::vector<HeteroItem> items)
    : budget_(std::move(budget)), items_(std::move(items)) {
  if (budget_ <= 0) throw InputError("budget must be positive");
  for (std::size_t i = 0; i < items_.size(); ++i) {
    const HeteroItem& it = items_[i];
    const std::string where = "item " + std::to_string(i);
    if (it.id != static_cast<AgentId>(i)) {
      throw InputError(where + ": ids must be 0..n-1 in order");
    }
    if (it.cost < 0) throw InputError(where + ": negative cost");
    if (it.value < 0) throw InputError(where + ": negative value");
    if (it.type < 0) throw InputError(where + ": negative type");
  }
}

int HeteroInstance::num_types() const {
  std::set<int> types;
  for (const HeteroItem& it : items_) types.insert(it.type);
  return static_cast<int>(types.size());
}

std::vector<Num> HeteroInstance::costs() const {
  std::vector<Num> out;
  out.reserve(items_.size());
  for (const HeteroItem& it : items_) out.push_back(it.cost);
  return out;
}

Num HeteroInstance::Value(std::span<const AgentId> set) const {
  Num total = 0;
  for (AgentId i : set) total += item(i).value;
  return total;
}

bool HeteroInstance::IsTypeFeasible(std::span<const AgentId> set) const {
  std::set<int> seen;
  for (AgentId i : set) {
    if (!seen.insert(item(i).type).second) return false;
  }
  return true;
}

HeteroInstance AsHetero(const Instance& additive) {
  const std::vector<Num>& values = additive.valuation().additive_values();
  std::vector<HeteroItem> items;
  for (const Agent& a : additive.agents()) {
    items.push_back({a.id, a.cost, values[a.id], a.id});
  }
  return HeteroInstance(additive.budget(), std::move(items));
}

std::strong_ordering operator<=>(const Tangent& a, const Tangent& b) {
  if (a.infinite || b.infinite) {
    if (a.infinite == b.infinite) return std::strong_ordering::equal;
    return a.infinite ? std::strong_ordering::greater
                      : std::strong_ordering::less;
  }
  return ThreeWay(a.slope, b.slope);
}

namespace {

Tangent SegmentTangent(const Num& dc, const Num& dv) {
  if (dc <= 0) return {true, Num(0)};
  Num slope = dv / dc;
  slope.canonicalize();
  return {false, std::move(slope)};
}

}  // namespace

HullChain BuildHullChains(const HeteroInstance& instance, const BidProfile& bids,
                          std::span<const AgentId> candidates) {
  std::map<int, std::vector<AgentId>> by_type;
  for (AgentId i : candidates) by_type[instance.item(i).type].push_back(i);

  HullChain chain;
  for (auto& [type, members] : by_type) {
    std::sort(members.begin(), members.end());
    std::vector<ChainLink>& links = chain.per_type[type];
    AgentId last = kVirtualItem;
    Num last_cost = 0;
    Num last_value = 0;
    while (true) {
      std::optional<AgentId> pick;
      Tangent best_tangent;
      Num best_dc;
      for (AgentId i : members) {
        const Num dv = instance.item(i).value - last_value;
        if (dv <= 0) continue;
        const Num dc = bids[i] - last_cost;
        Tangent t = SegmentTangent(dc, dv);
        bool better = false;
        if (!pick) {
          better = true;
        } else {
          const auto order = t <=> best_tangent;
          if (order > 0) {
            better = true;
          } else if (order == 0) {
            // Farthest point on the supporting line wins: for finite
            // tangents the larger cost, for infinite ones the larger value.
            if (t.infinite) {
              better = instance.item(i).value > instance.item(*pick).value;
            } else {
              better = dc > best_dc;
            }
          }
        }
        if (better) {
          pick = i;
          best_tangent = std::move(t);
          best_dc = dc;
        }
      }
      if (!pick) break;
      const HeteroItem& it = instance.item(*pick);
      links.push_back({*pick, type, last, bids[*pick] - last_cost,
                       it.value - last_value, best_tangent});
      last = *pick;
      last_cost = bids[*pick];
      last_value = it.value;
    }
    if (links.empty()) chain.per_type.erase(type);
  }

  for (const auto& [type, links] : chain.per_type) {
    chain.global_order.insert(chain.global_order.end(), links.begin(),
                              links.end());
  }
  std::stable_sort(chain.global_order.begin(), chain.global_order.end(),
                   [](const ChainLink& a, const ChainLink& b) {
                     const auto order = a.tangent <=> b.tangent;
                     if (order != 0) return order > 0;
                     if (a.type != b.type) return a.type < b.type;
                     return a.item < b.item;
                   });
  return chain;
}

FractionalSolution Fhk(const HeteroInstance& instance, const BidProfile& bids,
                       std::span<const AgentId> candidates, const Num& budget) {
  const HullChain chain = BuildHullChains(instance, bids, candidates);
  FractionalSolution sol;
  for (AgentId i : candidates) sol.alpha[i] = 0;
  for (const ChainLink& link : chain.global_order) {
    const Num next = sol.spend + link.reduced_cost;
    if (next <= budget) {
      if (link.previous != kVirtualItem) sol.alpha[link.previous] = 0;
      sol.alpha[link.item] = 1;
      sol.spend = next;
      sol.value += link.reduced_value;
      continue;
    }
    // reduced_cost > 0 here because spend <= budget.
    Num frac = (budget - sol.spend) / link.reduced_cost;
    frac.canonicalize();
    sol.alpha[link.item] = frac;
    if (link.previous != kVirtualItem) sol.alpha[link.previous] = 1 - frac;
    sol.value += frac * link.reduced_value;
    sol.spend = budget;
    break;
  }
  return sol;
}

GreHResult GreH(const HeteroInstance& instance, const BidProfile& bids) {
  const Num& budget = instance.budget();
  const AgentSet eligible = Eligible(bids, budget);
  HullChain chain = BuildHullChains(instance, bids, eligible);
  GreHResult r;
  r.order = std::move(chain.global_order);
  std::map<AgentId, AgentId> held;  // winner -> item it displaced
  Num total = 0;
  for (const ChainLink& link : r.order) {
    const Num& rc = link.reduced_cost;
    const Num& rv = link.reduced_value;
    if (rc * (rv + total) > budget * rv) {
      r.stop_item = link.item;
      break;
    }
    if (link.previous != kVirtualItem) held.erase(link.previous);
    held[link.item] = link.previous;
    total += rv;
  }
  for (const auto& [winner, prev] : held) {
    r.winners.push_back(winner);
    r.replaced[winner] = prev;
  }
  return r;
}

std::optional<AgentId> BestHeteroItem(const HeteroInstance& instance,
                                      std::span<const AgentId> candidates) {
  std::optional<AgentId> best;
  for (AgentId i : candidates) {
    if (!best || instance.item(i).value > instance.item(*best).value) best = i;
  }
  return best;
}

Real OnePlusSqrt2() { return Real(Num(1)) + Real::Sqrt2(); }

AllocationRule GreHRule(const HeteroInstance& instance) {
  return [instance](const BidProfile& bids) { return GreH(instance, bids).winners; };
}

namespace {

// Singleton test of the deterministic mechanism: does i* alone win?
bool SingletonBranch(const HeteroInstance& instance, const BidProfile& bids,
                     const AgentSet& eligible, AgentId best) {
  AgentSet rest;
  for (AgentId i : eligible) {
    if (i != best) rest.push_back(i);
  }
  const Num frac = Fhk(instance, bids, rest, instance.budget()).value;
  return Compare(frac, OnePlusSqrt2() * Real(instance.item(best).value)) <= 0;
}

}  // namespace

AllocationRule MhkRule(const HeteroInstance& instance) {
  return [instance](const BidProfile& bids) -> AgentSet {
    const AgentSet eligible = Eligible(bids, instance.budget());
    const auto best = BestHeteroItem(instance, eligible);
    if (!best) return {};
    if (SingletonBranch(instance, bids, eligible, *best)) return {*best};
    return GreH(instance, bids).winners;
  };
}

Outcome Mhk(const HeteroInstance& instance, const BidProfile& bids) {
  const Num& budget = instance.budget();
  const AgentSet eligible = Eligible(bids, budget);
  const auto best = BestHeteroItem(instance, eligible);
  if (!best) return Outcome::Empty();
  if (SingletonBranch(instance, bids, eligible, *best)) {
    return Outcome::Make({*best}, {{*best, budget}}, instance.item(*best).value);
  }
  const AgentSet winners = GreH(instance, bids).winners;
  auto payments = ThresholdPayments(MhkRule(instance), bids, winners, budget);
  return Outcome::Make(winners, std::move(payments), instance.Value(winners));
}

RandomizedOutcome Rmhk(const HeteroInstance& instance, const BidProfile& bids) {
  const Num& budget = instance.budget();
  const auto best = BestHeteroItem(instance, Eligible(bids, budget));
  if (!best) {
    return RandomizedOutcome({{Num(1) / 3, Outcome::Empty()},
                              {Num(2) / 3, Outcome::Empty()}});
  }
  const AgentSet winners = GreH(instance, bids).winners;
  auto payments = ThresholdPayments(GreHRule(instance), bids, winners, budget);
  return RandomizedOutcome(
      {{Num(1) / 3,
        Outcome::Make({*best}, {{*best, budget}}, instance.item(*best).value)},
       {Num(2) / 3,
        Outcome::Make(winners, std::move(payments), instance.Value(winners))}});
}

}  // namespace bfm
