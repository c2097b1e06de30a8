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

#include "bfm/verification.h"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <utility>

#include "bfm/brute_force.h"
#include "bfm/errors.h"
#include "bfm/knapsack_mech.h"
#include "bfm/real.h"
#include "bfm/submodular_mech.h"

namespace bfm {
namespace {

PropertyReport Pass(std::string property, const std::string& id) {
  return {std::move(property), id, true, ""};
}

PropertyReport Fail(std::string property, const std::string& id,
                    std::string witness) {
  return {std::move(property), id, false, std::move(witness)};
}

// Slack for comparing bisection brackets against closed-form bounds.
Num PaymentSlack(const Num& budget) { return ScaleByPow2(budget, 50); }

// Uniform draw in [0,1) with 20 bits, exact.
Num Jitter(std::mt19937_64& rng) {
  return Num(static_cast<unsigned long>(rng() >> 44)) /  // NOLINT(runtime/int)
         Num(1 << 20);
}

struct TypedPoint {
  Num cost;
  Num value;
};

// Recursion state for the structured oracle.
class StructuredSearch {
 public:
  StructuredSearch(std::vector<std::vector<TypedPoint>> types, Num budget)
      : types_(std::move(types)), budget_(std::move(budget)) {}

  Num Run() {
    Visit(0, 0, 0);
    return best_;
  }

 private:
  void Visit(std::size_t t, const Num& cost, const Num& value) {
    if (t == types_.size()) {
      if (split_) {
        EvaluateSplit(cost, value);
      } else if (cost <= budget_ && value > best_) {
        best_ = value;
      }
      return;
    }
    const std::vector<TypedPoint>& pts = types_[t];
    // Index 0 is the virtual item.
    for (std::size_t a = 0; a < pts.size(); ++a) {
      Visit(t + 1, cost + pts[a].cost, value + pts[a].value);
    }
    if (split_) return;
    for (std::size_t a = 0; a < pts.size(); ++a) {
      for (std::size_t b = a + 1; b < pts.size(); ++b) {
        split_ = std::make_pair(&pts[a], &pts[b]);
        Visit(t + 1, cost, value);
        split_.reset();
      }
    }
  }

  // (1 - alpha) p + alpha q on top of the integral part; the objective is
  // linear in alpha so an endpoint of the feasible interval is optimal.
  void EvaluateSplit(const Num& cost, const Num& value) {
    const TypedPoint& p = *split_->first;
    const TypedPoint& q = *split_->second;
    const Num dc = q.cost - p.cost;
    const Num dv = q.value - p.value;
    std::vector<Num> alphas = {Num(0), Num(1)};
    if (dc != 0) {
      Num a = (budget_ - cost - p.cost) / dc;
      if (a > 0 && a < 1) alphas.push_back(std::move(a));
    }
    for (const Num& a : alphas) {
      if (cost + p.cost + a * dc > budget_) continue;
      Num v = value + p.value + a * dv;
      if (v > best_) best_ = std::move(v);
    }
  }

  std::vector<std::vector<TypedPoint>> types_;
  Num budget_;
  Num best_ = 0;
  std::optional<std::pair<const TypedPoint*, const TypedPoint*>> split_;
};

std::string WinsOrLoses(bool wins) { return wins ? "wins" : "loses"; }

}  // namespace

Num StructuredFractionalOptHetero(const HeteroInstance& instance,
                                  const BidProfile& costs, const Num& budget) {
  if (instance.size() > kMaxStructuredItems ||
      instance.num_types() > kMaxStructuredTypes) {
    throw LimitError("structured oracle handles at most " +
                     std::to_string(kMaxStructuredItems) + " items and " +
                     std::to_string(kMaxStructuredTypes) + " types");
  }
  std::map<int, std::vector<TypedPoint>> by_type;
  for (const HeteroItem& it : instance.items()) {
    auto& pts = by_type[it.type];
    if (pts.empty()) pts.push_back({Num(0), Num(0)});
    pts.push_back({costs[it.id], it.value});
  }
  std::vector<std::vector<TypedPoint>> types;
  for (auto& [type, pts] : by_type) types.push_back(std::move(pts));
  return StructuredSearch(std::move(types), budget).Run();
}

PropertyReport CheckMonotoneAllocation(const NamedRule& rule,
                                       const BidProfile& base, const Num& budget,
                                       const std::string& instance_id,
                                       std::uint64_t seed,
                                       MonotonicityGrid grid) {
  const std::string property = "monotone:" + rule.name;
  std::mt19937_64 rng(seed);
  const AgentSet winners = rule.rule(base);
  const int steps = grid.perturbations;
  for (AgentId i = 0; i < base.size(); ++i) {
    const Num& b = base[i];
    const bool wins = Contains(winners, i);
    for (int k = 0; k < steps; ++k) {
      const Num r = Jitter(rng);
      Num moved;
      if (wins) {
        if (b == 0) break;
        moved = b * (k + r) / steps;
      } else {
        if (b >= budget) break;
        moved = b + (budget - b) * (k + 1 - r) / steps;
      }
      moved.canonicalize();
      const bool now = Contains(rule.rule(base.WithBid(i, moved)), i);
      if (now != wins) {
        return Fail(property, instance_id,
                    "agent " + std::to_string(i) + " " + WinsOrLoses(wins) +
                        " at bids " + base.ToString() + " but " +
                        WinsOrLoses(now) + " at bid " + ToString(moved));
      }
    }
  }
  return Pass(property, instance_id);
}

NamedRule PlantedBugRule(const Instance& additive) {
  const std::vector<Num> values = additive.valuation().additive_values();
  const Num budget = additive.budget();
  return {"planted-bug", [values, budget](const BidProfile& bids) -> AgentSet {
            std::vector<AgentId> order = Eligible(bids, budget);
            // Lowest value per unit bid first, ties by larger id.
            std::sort(order.begin(), order.end(), [&](AgentId a, AgentId b) {
              const bool inf_a = bids[a] == 0;
              const bool inf_b = bids[b] == 0;
              if (inf_a != inf_b) return inf_b;
              if (!inf_a) {
                const int c = cmp(values[a] * bids[b], values[b] * bids[a]);
                if (c != 0) return c < 0;
              }
              return a > b;
            });
            AgentSet out;
            Num spent = 0;
            for (AgentId k : order) {
              if (spent + bids[k] > budget) break;
              spent += bids[k];
              out.push_back(k);
            }
            return MakeAgentSet(std::move(out));
          }};
}

PropertyReport CheckBudgetFeasible(const std::string& mechanism,
                                   const RandomizedOutcome& outcome,
                                   const BidProfile& bids, const Num& budget,
                                   const std::string& instance_id) {
  const std::string property = "budget-feasible:" + mechanism;
  int index = 0;
  for (const Branch& branch : outcome.branches()) {
    const Outcome& o = branch.outcome;
    const std::string where = "branch " + std::to_string(index++) + " winners " +
                              ToString(o.winners);
    if (o.total_payment > budget) {
      return Fail(property, instance_id,
                  where + " pay " + ToString(o.total_payment) + " > B = " +
                      ToString(budget));
    }
    for (const auto& [agent, pay] : o.payments) {
      if (pay < bids[agent]) {
        return Fail(property, instance_id,
                    where + ": agent " + std::to_string(agent) + " paid " +
                        ToString(pay) + " below its bid " +
                        ToString(bids[agent]));
      }
    }
  }
  return Pass(property, instance_id);
}

PropertyReport CheckPaymentUpperBounds(const NamedInstance& named,
                                       const BidProfile& bids) {
  const std::string property = "payment-upper-bound";
  const Num& budget = InstanceBudget(named.instance);
  const Num slack = PaymentSlack(budget);
  auto check = [&](AgentId j, const Num& threshold,
                   const Num& bound) -> std::optional<PropertyReport> {
    if (threshold <= bound + slack) return std::nullopt;
    return Fail(property, named.id,
                "winner " + std::to_string(j) + " at bids " + bids.ToString() +
                    " has threshold " + ToString(threshold) + " > bound " +
                    ToString(bound));
  };

  if (const auto* plain = std::get_if<Instance>(&named.instance)) {
    const GreedyTrace trace = GreedySm(*plain, bids, budget / 2);
    const AllocationRule rule = GreedySmRule(*plain);
    Num total = 0;
    for (std::size_t k = 0; k < trace.stop_index; ++k) total += trace.marginals[k];
    for (std::size_t k = 0; k < trace.stop_index; ++k) {
      const AgentId j = trace.order[k];
      const Num bound = total == 0 ? Num(0) : trace.marginals[k] * budget / total;
      const Num t = ThresholdPayment(rule, bids, j, budget).Payment();
      if (auto failure = check(j, t, bound)) return *failure;
    }
    return Pass(property, named.id);
  }

  const HeteroInstance& typed = std::get<HeteroInstance>(named.instance);
  const GreHResult gre = GreH(typed, bids);
  const AllocationRule rule = GreHRule(typed);
  const Num total = typed.Value(gre.winners);
  for (AgentId j : gre.winners) {
    const AgentId r = gre.replaced.at(j);
    const Num value_r = r == kVirtualItem ? Num(0) : typed.item(r).value;
    const Num bid_r = r == kVirtualItem ? Num(0) : bids[r];
    const Num& value_j = typed.item(j).value;
    const Num bound = Min((value_j - value_r) * budget / total + bid_r,
                          value_j * budget / total);
    const Num t = ThresholdPayment(rule, bids, j, budget).Payment();
    if (auto failure = check(j, t, bound)) return *failure;
  }
  return Pass(property, named.id);
}

bool CheckLemmaAverage(const Valuation& valuation, const BidProfile& costs,
                       std::span<const AgentId> s, std::span<const AgentId> t) {
  AgentSet diff;
  for (AgentId i : s) {
    if (!Contains(t, i)) throw ContractViolation("S must be a subset of T");
  }
  for (AgentId i : t) {
    if (!Contains(s, i)) diff.push_back(i);
  }
  if (diff.empty()) throw ContractViolation("S must be a strict subset of T");
  Num cost_gap = 0;
  for (AgentId i : diff) cost_gap += costs[i];
  if (cost_gap <= 0) throw ContractViolation("c(T) - c(S) must be positive");

  // t0 maximizes m_S(t)/c(t); a zero cost makes the right side infinite.
  std::optional<AgentId> best;
  Num best_m;
  for (AgentId i : diff) {
    Num m = valuation.Marginal(s, i);
    if (costs[i] == 0) return true;
    if (!best || m * costs[*best] > best_m * costs[i]) {
      best = i;
      best_m = std::move(m);
    }
  }
  const Num gain = valuation.Evaluate(t) - valuation.Evaluate(s);
  return gain * costs[*best] <= best_m * cost_gap;
}

PropertyReport CheckLemmaAverageSampled(const Instance& instance,
                                        const std::string& instance_id,
                                        std::uint64_t seed, int samples) {
  const std::string property = "lemma-average";
  const BidProfile costs = BidProfile::Truthful(instance);
  const int n = instance.size();
  if (n == 0 || n > 30) return Pass(property, instance_id);
  std::mt19937_64 rng(seed);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (int k = 0; k < samples; ++k) {
    const std::uint64_t t_mask = rng() & full;
    const std::uint64_t s_mask = t_mask & rng();
    if (s_mask == t_mask) continue;
    AgentSet s;
    AgentSet t;
    for (int i = 0; i < n; ++i) {
      if (t_mask >> i & 1) t.push_back(i);
      if (s_mask >> i & 1) s.push_back(i);
    }
    Num gap = 0;
    for (AgentId i : t) {
      if (!Contains(s, i)) gap += costs[i];
    }
    if (gap <= 0) continue;
    if (!CheckLemmaAverage(instance.valuation(), costs, s, t)) {
      return Fail(property, instance_id,
                  "S=" + ToString(s) + " T=" + ToString(t) + " costs " +
                      costs.ToString());
    }
  }
  return Pass(property, instance_id);
}

PropertyReport CheckOptUpperBound(const Instance& instance,
                                  const std::string& instance_id) {
  const std::string property = "opt-upper-bound";
  const BidProfile bids = BidProfile::Truthful(instance);
  const Num opt = BruteForceOpt(instance, bids).value;
  const auto best =
      BestSingleton(instance.valuation(), Eligible(bids, instance.budget()));
  if (!best) return Pass(property, instance_id);
  const Num greedy = instance.valuation().Evaluate(
      GreedySm(instance, bids, instance.budget() / 2).winners);
  const Real e = Real::E();
  const Real bound = e / (e - Real(Num(1))) *
                     Real(3 * greedy + 2 * instance.valuation().Singleton(*best));
  if (Compare(opt, bound) <= 0) return Pass(property, instance_id);
  return Fail(property, instance_id,
              "opt " + ToString(opt) + " > e/(e-1)(3*" + ToString(greedy) +
                  " + 2*v(i*)) ~ " + bound.Approximate(20));
}

PropertyReport CheckFractionalGreedy(const Instance& instance,
                                     const std::string& instance_id) {
  const std::string property = "fractional-greedy";
  const BidProfile bids = BidProfile::Truthful(instance);
  const Num opt = BruteForceOpt(instance, bids).value;
  const Num fgre = FractionalGreedySm(instance, bids).total;
  const Real bound = (Real(Num(1)) - Real(Num(1)) / Real::E()) * Real(opt);
  if (Compare(fgre, bound) >= 0) return Pass(property, instance_id);
  return Fail(property, instance_id,
              "fgre " + ToString(fgre) + " < (1-1/e) opt, opt = " + ToString(opt));
}

PropertyReport CheckKnapsackChain(const Instance& instance,
                                  const std::string& instance_id) {
  const std::string property = "knapsack-chain";
  const BidProfile bids = BidProfile::Truthful(instance);
  const GreKnapsackResult gre = GreKnapsack(instance, bids);
  if (!gre.stop_item) return Pass(property, instance_id);
  const std::vector<Num>& values = instance.valuation().additive_values();
  const AgentSet eligible = Eligible(bids, instance.budget());
  const Num fopt =
      FoptKnapsack(values, bids, eligible, instance.budget()).value;
  const AgentId best = *BestSingleton(instance.valuation(), eligible);
  const Num rhs = 2 * instance.valuation().Evaluate(gre.winners) + values[best];
  if (fopt < rhs) return Pass(property, instance_id);
  return Fail(property, instance_id,
              "fopt " + ToString(fopt) + " >= 2 v(S) + v(i*) = " + ToString(rhs));
}

PropertyReport CheckFhkOptimal(const HeteroInstance& instance,
                               const std::string& instance_id) {
  const std::string property = "fhk-optimal";
  const BidProfile costs(instance.costs());
  AgentSet all;
  for (int i = 0; i < instance.size(); ++i) all.push_back(i);
  const FractionalSolution sol = Fhk(instance, costs, all, instance.budget());
  const Num oracle =
      StructuredFractionalOptHetero(instance, costs, instance.budget());
  if (sol.value != oracle) {
    return Fail(property, instance_id,
                "fhk " + ToString(sol.value) + " != oracle " + ToString(oracle));
  }
  std::map<int, int> nonzero;
  for (const auto& [id, alpha] : sol.alpha) {
    if (alpha != 0) ++nonzero[instance.item(id).type];
  }
  int split_types = 0;
  for (const auto& [type, count] : nonzero) {
    if (count > 2) {
      return Fail(property, instance_id,
                  "type " + std::to_string(type) + " has " +
                      std::to_string(count) + " nonzero fractions");
    }
    if (count == 2) ++split_types;
  }
  if (split_types > 1) {
    return Fail(property, instance_id,
                std::to_string(split_types) + " types are split");
  }
  return Pass(property, instance_id);
}

RatioRow ApproximationRow(MechanismId id, const NamedInstance& named) {
  RatioRow row;
  row.instance_id = named.id;
  row.mechanism = std::string(MechanismName(id));
  const BidProfile bids = TruthfulBids(named.instance);
  row.value = RunMechanism(id, named.instance, bids).ExpectedValue();
  row.opt = OptValue(named.instance, bids);
  const std::optional<Real> bound = RatioBound(id);
  if (row.opt == 0) {
    row.ratio = 1;
  } else if (row.value == 0) {
    row.infinite = true;
  } else {
    row.ratio = row.opt / row.value;
    row.ratio.canonicalize();
  }
  if (bound) {
    row.pass = !row.infinite && Compare(row.ratio, *bound) <= 0;
    if (!row.pass) {
      row.witness = "ratio " + (row.infinite ? std::string("inf")
                                              : ToString(row.ratio)) +
                    " exceeds " + bound->Approximate(20);
    }
  }
  return row;
}

std::vector<RatioRow> ApproximationReport(MechanismId id,
                                          std::span<const NamedInstance> suite) {
  std::vector<RatioRow> rows;
  rows.reserve(suite.size());
  for (const NamedInstance& named : suite) rows.push_back(ApproximationRow(id, named));
  return rows;
}

std::vector<MechanismId> ApplicableMechanisms(const AnyInstance& instance) {
  if (std::holds_alternative<HeteroInstance>(instance)) {
    return {MechanismId::kGreH, MechanismId::kMhk, MechanismId::kRmhk};
  }
  if (!IsAdditive(instance)) {
    return {MechanismId::kGreedySm, MechanismId::kRandomSm, MechanismId::kDetSm};
  }
  const auto all = AllMechanisms();
  return {all.begin(), all.end()};
}

std::vector<PropertyReport> RunAllChecks(const NamedInstance& named,
                                         std::uint64_t seed) {
  std::vector<PropertyReport> out;
  const BidProfile bids = TruthfulBids(named.instance);
  const Num& budget = InstanceBudget(named.instance);
  for (const NamedRule& rule : DeterministicRules(named.instance)) {
    out.push_back(CheckMonotoneAllocation(rule, bids, budget, named.id, seed));
  }
  for (MechanismId id : ApplicableMechanisms(named.instance)) {
    const std::string name(MechanismName(id));
    out.push_back(CheckBudgetFeasible(
        name, RunMechanism(id, named.instance, bids), bids, budget, named.id));
    const RatioRow row = ApproximationRow(id, named);
    out.push_back({"ratio:" + name, named.id, row.pass, row.witness});
  }
  out.push_back(CheckPaymentUpperBounds(named, bids));
  if (const auto* plain = std::get_if<Instance>(&named.instance)) {
    out.push_back(CheckLemmaAverageSampled(*plain, named.id, seed, 64));
    out.push_back(CheckOptUpperBound(*plain, named.id));
    out.push_back(CheckFractionalGreedy(*plain, named.id));
    if (IsAdditive(named.instance)) {
      out.push_back(CheckKnapsackChain(*plain, named.id));
    }
  } else {
    const HeteroInstance& typed = std::get<HeteroInstance>(named.instance);
    if (typed.size() <= kMaxStructuredItems &&
        typed.num_types() <= kMaxStructuredTypes) {
      out.push_back(CheckFhkOptimal(typed, named.id));
    }
  }
  return out;
}

}  // namespace bfm
