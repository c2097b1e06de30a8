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

#include <algorithm>
#include <map>
#include <utility>

#include "bfm/brute_force.h"
#include "bfm/errors.h"

namespace bfm {
namespace {

// Is m1/b1 strictly better than m2/b2? Zero bids are +inf and never beat
// each other, so the earlier (smaller id) candidate keeps the tie.
bool BetterRatio(const Num& m1, const Num& b1, const Num& m2, const Num& b2) {
  const bool inf1 = b1 == 0;
  const bool inf2 = b2 == 0;
  if (inf1 || inf2) return inf1 && !inf2;
  return m1 * b2 > m2 * b1;
}

// b <= cap * m / total, with 0/0 read as 0.
bool PassesShareCondition(const Num& bid, const Num& cap, const Num& m,
                          const Num& total) {
  if (total == 0) return bid == 0;
  return bid * total <= cap * m;
}

Outcome SingletonOutcome(const Valuation& valuation, AgentId who,
                         const Num& budget) {
  return Outcome::Make({who}, {{who, budget}}, valuation.Singleton(who));
}

}  // namespace

GreedyTrace GreedyOrder(const Valuation& valuation, const BidProfile& bids,
                        std::span<const AgentId> candidates) {
  GreedyTrace trace;
  std::vector<AgentId> remaining(candidates.begin(), candidates.end());
  std::sort(remaining.begin(), remaining.end());
  AgentSet prefix;
  while (!remaining.empty()) {
    std::size_t best = 0;
    Num best_marginal = valuation.Marginal(prefix, remaining[0]);
    for (std::size_t k = 1; k < remaining.size(); ++k) {
      Num m = valuation.Marginal(prefix, remaining[k]);
      if (BetterRatio(m, bids[remaining[k]], best_marginal,
                      bids[remaining[best]])) {
        best = k;
        best_marginal = std::move(m);
      }
    }
    const AgentId chosen = remaining[best];
    trace.order.push_back(chosen);
    trace.marginals.push_back(std::move(best_marginal));
    prefix.insert(std::lower_bound(prefix.begin(), prefix.end(), chosen), chosen);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  trace.stop_index = trace.order.size();
  return trace;
}

GreedyTrace GreedySm(const Instance& instance, const BidProfile& bids,
                     const Num& budget_cap) {
  if (budget_cap <= 0) throw ContractViolation("greedy_sm needs a positive cap");
  const AgentSet eligible = Eligible(bids, instance.budget());
  GreedyTrace trace = GreedyOrder(instance.valuation(), bids, eligible);
  Num total = 0;
  std::size_t k = 0;
  for (; k < trace.order.size(); ++k) {
    const Num with = total + trace.marginals[k];
    if (!PassesShareCondition(bids[trace.order[k]], budget_cap,
                              trace.marginals[k], with)) {
      break;
    }
    total = with;
  }
  trace.stop_index = k;
  trace.winners = MakeAgentSet(
      std::vector<AgentId>(trace.order.begin(),
                           trace.order.begin() + static_cast<std::ptrdiff_t>(k)));
  return trace;
}

FractionalGreedyResult FractionalGreedySm(const Instance& instance,
                                          const BidProfile& bids) {
  const AgentSet eligible = Eligible(bids, instance.budget());
  const GreedyTrace trace = GreedyOrder(instance.valuation(), bids, eligible);
  FractionalGreedyResult r;
  Num spent = 0;
  std::size_t k = 0;
  for (; k < trace.order.size(); ++k) {
    const Num next = spent + bids[trace.order[k]];
    if (next > instance.budget()) break;
    spent = next;
    r.integral_value += trace.marginals[k];
  }
  r.ell = k;
  if (k < trace.order.size()) {
    r.frac_cost = instance.budget() - spent;
    r.frac_value = trace.marginals[k] * r.frac_cost / bids[trace.order[k]];
  }
  r.total = r.integral_value + r.frac_value;
  return r;
}

std::optional<AgentId> BestSingleton(const Valuation& valuation,
                                     std::span<const AgentId> candidates) {
  std::optional<AgentId> best;
  Num best_value;
  for (AgentId i : candidates) {
    Num v = valuation.Singleton(i);
    if (!best || v > best_value || (v == best_value && i < *best)) {
      best = i;
      best_value = std::move(v);
    }
  }
  return best;
}

OptOracle BruteForceOracle() {
  return [](const Valuation& valuation, const BidProfile& costs,
            std::span<const AgentId> candidates, const Num& budget) {
    return BruteForceOpt(valuation, costs, candidates, budget).value;
  };
}

Real DetMechSmFactor() {
  const Real e = Real::E();
  const Real root = (Real(Num(1)) + Real(Num(24)) * e * e).Sqrt();
  return (Real(Num(1)) + Real(Num(4)) * e + root) /
         (Real(Num(2)) * (e - Real(Num(1))));
}

AllocationRule GreedySmRule(const Instance& instance) {
  return [instance](const BidProfile& bids) {
    return GreedySm(instance, bids, instance.budget() / 2).winners;
  };
}

AllocationRule BestSingletonRule(const Instance& instance) {
  return [instance](const BidProfile& bids) -> AgentSet {
    const auto best = BestSingleton(instance.valuation(),
                                    Eligible(bids, instance.budget()));
    if (!best) return {};
    return {*best};
  };
}

namespace {

// True when the greedy branch runs: x * v(i*) < opt(A - i*, B).
bool GreedyBranchActive(const Instance& instance, const BidProfile& bids,
                        const AgentSet& eligible, AgentId best,
                        const OptOracle& oracle) {
  AgentSet rest;
  for (AgentId i : eligible) {
    if (i != best) rest.push_back(i);
  }
  const Num opt_rest = oracle(instance.valuation(), bids, rest, instance.budget());
  const Real bound = DetMechSmFactor() * Real(instance.valuation().Singleton(best));
  return Compare(opt_rest, bound) > 0;
}

}  // namespace

AllocationRule DetMechSmRule(const Instance& instance, OptOracle oracle) {
  return [instance, oracle](const BidProfile& bids) -> AgentSet {
    const AgentSet eligible = Eligible(bids, instance.budget());
    const auto best = BestSingleton(instance.valuation(), eligible);
    if (!best) return {};
    if (!GreedyBranchActive(instance, bids, eligible, *best, oracle)) {
      return {*best};
    }
    return GreedySm(instance, bids, instance.budget() / 2).winners;
  };
}

RandomizedOutcome RandomMechSm(const Instance& instance, const BidProfile& bids) {
  const Num& budget = instance.budget();
  const AgentSet eligible = Eligible(bids, budget);
  const auto best = BestSingleton(instance.valuation(), eligible);
  if (!best) {
    return RandomizedOutcome({{Num(2) / 5, Outcome::Empty()},
                              {Num(3) / 5, Outcome::Empty()}});
  }
  const GreedyTrace greedy = GreedySm(instance, bids, budget / 2);
  auto payments =
      ThresholdPayments(GreedySmRule(instance), bids, greedy.winners, budget);
  Outcome greedy_outcome =
      Outcome::Make(greedy.winners, std::move(payments),
                    instance.valuation().Evaluate(greedy.winners));
  return RandomizedOutcome(
      {{Num(2) / 5, SingletonOutcome(instance.valuation(), *best, budget)},
       {Num(3) / 5, std::move(greedy_outcome)}});
}

Outcome DetMechSm(const Instance& instance, const BidProfile& bids,
                  const OptOracle& oracle) {
  const Num& budget = instance.budget();
  const AgentSet eligible = Eligible(bids, budget);
  const auto best = BestSingleton(instance.valuation(), eligible);
  if (!best) return Outcome::Empty();
  if (!GreedyBranchActive(instance, bids, eligible, *best, oracle)) {
    return SingletonOutcome(instance.valuation(), *best, budget);
  }
  const GreedyTrace greedy = GreedySm(instance, bids, budget / 2);
  const AllocationRule greedy_rule = GreedySmRule(instance);
  // Winner w != i* wins iff it passes greedy_sm and keeps the greedy branch
  // active; both conditions are monotone in b_w, so the joint threshold is
  // the smaller of the two.
  const AgentId star = *best;
  const AllocationRule branch_rule = [&](const BidProfile& b) -> AgentSet {
    AgentSet out;
    const AgentSet elig = Eligible(b, budget);
    if (!Contains(elig, star) ||
        !GreedyBranchActive(instance, b, elig, star, oracle)) {
      return out;
    }
    for (AgentId w : greedy.winners) {
      if (w != star && Contains(elig, w)) out.push_back(w);
    }
    return out;
  };
  std::map<AgentId, Num> payments;
  for (AgentId w : greedy.winners) {
    Num p = ThresholdPayment(greedy_rule, bids, w, budget).Payment();
    if (w != star) {
      p = Min(p, ThresholdPayment(branch_rule, bids, w, budget).Payment());
    }
    payments[w] = std::move(p);
  }
  return Outcome::Make(greedy.winners, std::move(payments),
                       instance.valuation().Evaluate(greedy.winners));
}

}  // namespace bfm
