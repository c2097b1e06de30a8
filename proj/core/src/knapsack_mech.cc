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

#include "bfm/knapsack_mech.h"

#include <algorithm>
#include <utility>

#include "bfm/errors.h"
#include "bfm/hetero_mech.h"
#include "bfm/real.h"
#include "bfm/submodular_mech.h"

namespace bfm {
namespace {

const std::vector<Num>& AdditiveValues(const Instance& instance) {
  if (instance.valuation().kind() != Valuation::Kind::kAdditive) {
    throw ContractViolation("knapsack mechanisms need an additive valuation");
  }
  return instance.valuation().additive_values();
}

Num SumValues(std::span<const Num> values, std::span<const AgentId> set) {
  Num total = 0;
  for (AgentId i : set) total += values[i];
  return total;
}

// (1+sqrt2) v(i*) < fopt(A - i*): the deterministic mechanism runs gre.
bool GreBranchActive(std::span<const Num> values, const BidProfile& bids,
                     const AgentSet& eligible, AgentId best, const Num& budget) {
  AgentSet rest;
  for (AgentId i : eligible) {
    if (i != best) rest.push_back(i);
  }
  const Num frac = FoptKnapsack(values, bids, rest, budget).value;
  return Compare(frac, OnePlusSqrt2() * Real(values[best])) > 0;
}

}  // namespace

std::vector<AgentId> KnapsackRatioOrder(std::span<const Num> values,
                                        const BidProfile& bids,
                                        std::span<const AgentId> candidates) {
  std::vector<AgentId> order(candidates.begin(), candidates.end());
  std::sort(order.begin(), order.end());
  std::stable_sort(order.begin(), order.end(), [&](AgentId a, AgentId b) {
    const bool inf_a = bids[a] == 0;
    const bool inf_b = bids[b] == 0;
    if (inf_a || inf_b) return inf_a && !inf_b;
    return values[a] * bids[b] > values[b] * bids[a];
  });
  return order;
}

GreKnapsackResult GreKnapsack(const Instance& instance, const BidProfile& bids) {
  const std::vector<Num>& values = AdditiveValues(instance);
  const Num& budget = instance.budget();
  GreKnapsackResult r;
  r.order = KnapsackRatioOrder(values, bids, Eligible(bids, budget));
  Num total = 0;
  for (AgentId k : r.order) {
    const Num with = total + values[k];
    const bool pass =
        with == 0 ? bids[k] == 0 : bids[k] * with <= budget * values[k];
    if (!pass) {
      r.stop_item = k;
      break;
    }
    r.winners.push_back(k);
    total = with;
  }
  std::sort(r.winners.begin(), r.winners.end());
  return r;
}

KnapsackFractionalOpt FoptKnapsack(std::span<const Num> values,
                                   const BidProfile& bids,
                                   std::span<const AgentId> candidates,
                                   const Num& budget) {
  KnapsackFractionalOpt r;
  for (AgentId i : candidates) r.fractions[i] = 0;
  Num spend = 0;
  for (AgentId k : KnapsackRatioOrder(values, bids, candidates)) {
    const Num next = spend + bids[k];
    if (next <= budget) {
      r.fractions[k] = 1;
      r.value += values[k];
      spend = next;
      continue;
    }
    Num frac = (budget - spend) / bids[k];
    frac.canonicalize();
    r.fractions[k] = frac;
    r.value += frac * values[k];
    r.split_agent = k;
    break;
  }
  return r;
}

std::map<AgentId, Num> KnapsackPaymentFormula(const Instance& instance,
                                              const BidProfile& bids,
                                              const AgentSet& winners,
                                              std::optional<AgentId> stop_item,
                                              PaymentContext context) {
  const std::vector<Num>& values = AdditiveValues(instance);
  const Num& budget = instance.budget();
  const GreKnapsackResult gre = GreKnapsack(instance, bids);
  if (gre.winners != winners || gre.stop_item != stop_item) {
    throw ContractViolation("winners " + ToString(winners) +
                            " are not the greedy output " +
                            ToString(gre.winners));
  }
  const AgentSet eligible = Eligible(bids, budget);
  const auto best = BestSingleton(instance.valuation(), eligible);
  if (context == PaymentContext::kMechKnapsackBranch &&
      (!best || !GreBranchActive(values, bids, eligible, *best, budget))) {
    throw ContractViolation("the greedy branch is not active");
  }

  const Num total = SumValues(values, winners);
  std::map<AgentId, Num> payments;
  for (AgentId i : winners) {
    Num p = total == 0 ? budget : budget * values[i] / total;
    if (stop_item && values[*stop_item] > 0) {
      p = Min(p, values[i] * bids[*stop_item] / values[*stop_item]);
    }
    if (context == PaymentContext::kMechKnapsackBranch && i != *best) {
      const AgentId star = *best;
      const AllocationRule branch = [&](const BidProfile& b) -> AgentSet {
        const AgentSet elig = Eligible(b, budget);
        if (!Contains(elig, i) || !GreBranchActive(values, b, elig, star, budget)) {
          return {};
        }
        return {i};
      };
      p = Min(p, ThresholdPayment(branch, bids, i, budget).LowerBound());
    }
    p.canonicalize();
    payments[i] = std::move(p);
  }
  return payments;
}

AllocationRule GreKnapsackRule(const Instance& instance) {
  return [instance](const BidProfile& bids) {
    return GreKnapsack(instance, bids).winners;
  };
}

AllocationRule MechKnapsackRule(const Instance& instance) {
  return [instance](const BidProfile& bids) -> AgentSet {
    const std::vector<Num>& values = AdditiveValues(instance);
    const AgentSet eligible = Eligible(bids, instance.budget());
    const auto best = BestSingleton(instance.valuation(), eligible);
    if (!best) return {};
    if (!GreBranchActive(values, bids, eligible, *best, instance.budget())) {
      return {*best};
    }
    return GreKnapsack(instance, bids).winners;
  };
}

Outcome MechKnapsack(const Instance& instance, const BidProfile& bids) {
  const std::vector<Num>& values = AdditiveValues(instance);
  const Num& budget = instance.budget();
  const AgentSet eligible = Eligible(bids, budget);
  const auto best = BestSingleton(instance.valuation(), eligible);
  if (!best) return Outcome::Empty();
  if (!GreBranchActive(values, bids, eligible, *best, budget)) {
    return Outcome::Make({*best}, {{*best, budget}}, values[*best]);
  }
  const GreKnapsackResult gre = GreKnapsack(instance, bids);
  auto payments = KnapsackPaymentFormula(instance, bids, gre.winners,
                                         gre.stop_item,
                                         PaymentContext::kMechKnapsackBranch);
  return Outcome::Make(gre.winners, std::move(payments),
                       SumValues(values, gre.winners));
}

RandomizedOutcome RmKnapsack(const Instance& instance, const BidProfile& bids) {
  const std::vector<Num>& values = AdditiveValues(instance);
  const Num& budget = instance.budget();
  const auto best = BestSingleton(instance.valuation(), Eligible(bids, budget));
  if (!best) {
    return RandomizedOutcome({{Num(1) / 3, Outcome::Empty()},
                              {Num(2) / 3, Outcome::Empty()}});
  }
  const GreKnapsackResult gre = GreKnapsack(instance, bids);
  auto payments = KnapsackPaymentFormula(instance, bids, gre.winners,
                                         gre.stop_item,
                                         PaymentContext::kGreedyAlone);
  return RandomizedOutcome(
      {{Num(1) / 3, Outcome::Make({*best}, {{*best, budget}}, values[*best])},
       {Num(2) / 3, Outcome::Make(gre.winners, std::move(payments),
                                  SumValues(values, gre.winners))}});
}

}  // namespace bfm
