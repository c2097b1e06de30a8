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

#include "bfm/mechanisms.h"

#include <array>
#include <utility>

#include "bfm/brute_force.h"
#include "bfm/errors.h"
#include "bfm/knapsack_mech.h"
#include "bfm/submodular_mech.h"

namespace bfm {
namespace {

constexpr std::array<MechanismId, 9> kAll = {
    MechanismId::kGreedySm, MechanismId::kRandomSm, MechanismId::kDetSm,
    MechanismId::kGreK,     MechanismId::kMechK,    MechanismId::kRmK,
    MechanismId::kGreH,     MechanismId::kMhk,      MechanismId::kRmhk,
};

const Instance& NeedSetInstance(MechanismId id, const AnyInstance& instance) {
  if (const auto* plain = std::get_if<Instance>(&instance)) return *plain;
  throw InputError(std::string(MechanismName(id)) +
                   " does not accept typed (heterogeneous) instances");
}

const Instance& NeedAdditive(MechanismId id, const AnyInstance& instance) {
  const Instance& plain = NeedSetInstance(id, instance);
  if (plain.valuation().kind() != Valuation::Kind::kAdditive) {
    throw InputError(std::string(MechanismName(id)) +
                     " needs an additive valuation");
  }
  return plain;
}

HeteroInstance NeedHetero(MechanismId id, const AnyInstance& instance) {
  if (const auto* typed = std::get_if<HeteroInstance>(&instance)) return *typed;
  return AsHetero(NeedAdditive(id, instance));
}

RandomizedOutcome Single(Outcome outcome) {
  return RandomizedOutcome({{Num(1), std::move(outcome)}});
}

}  // namespace

std::span<const MechanismId> AllMechanisms() { return kAll; }

std::string_view MechanismName(MechanismId id) {
  switch (id) {
    case MechanismId::kGreedySm: return "greedy-sm";
    case MechanismId::kRandomSm: return "random-sm";
    case MechanismId::kDetSm: return "det-sm";
    case MechanismId::kGreK: return "gre-k";
    case MechanismId::kMechK: return "mech-k";
    case MechanismId::kRmK: return "rm-k";
    case MechanismId::kGreH: return "gre-h";
    case MechanismId::kMhk: return "mhk";
    case MechanismId::kRmhk: return "rmhk";
  }
  return "?";
}

MechanismId ParseMechanism(std::string_view name) {
  std::string valid;
  for (MechanismId id : kAll) {
    if (MechanismName(id) == name) return id;
    if (!valid.empty()) valid += ", ";
    valid += MechanismName(id);
  }
  throw InputError("unknown mechanism '" + std::string(name) +
                   "' (expected one of " + valid + ")");
}

bool IsRandomized(MechanismId id) {
  return id == MechanismId::kRandomSm || id == MechanismId::kRmK ||
         id == MechanismId::kRmhk;
}

int InstanceSize(const AnyInstance& instance) {
  return std::visit([](const auto& x) { return x.size(); }, instance);
}

const Num& InstanceBudget(const AnyInstance& instance) {
  return std::visit([](const auto& x) -> const Num& { return x.budget(); },
                    instance);
}

BidProfile TruthfulBids(const AnyInstance& instance) {
  return std::visit([](const auto& x) { return BidProfile(x.costs()); },
                    instance);
}

bool IsAdditive(const AnyInstance& instance) {
  const auto* plain = std::get_if<Instance>(&instance);
  return plain && plain->valuation().kind() == Valuation::Kind::kAdditive;
}

Num SetValue(const AnyInstance& instance, std::span<const AgentId> set) {
  if (const auto* plain = std::get_if<Instance>(&instance)) {
    return plain->valuation().Evaluate(set);
  }
  return std::get<HeteroInstance>(instance).Value(set);
}

Num OptValue(const AnyInstance& instance, const BidProfile& costs) {
  return std::visit([&](const auto& x) { return BruteForceOpt(x, costs).value; },
                    instance);
}

RandomizedOutcome RunMechanism(MechanismId id, const AnyInstance& instance,
                               const BidProfile& bids) {
  if (bids.size() != InstanceSize(instance)) {
    throw InputError("bid profile has " + std::to_string(bids.size()) +
                     " entries for " + std::to_string(InstanceSize(instance)) +
                     " agents");
  }
  switch (id) {
    case MechanismId::kGreedySm: {
      const Instance& inst = NeedSetInstance(id, instance);
      const AgentSet winners =
          GreedySm(inst, bids, inst.budget() / 2).winners;
      auto payments = ThresholdPayments(GreedySmRule(inst), bids, winners,
                                        inst.budget());
      return Single(Outcome::Make(winners, std::move(payments),
                                  inst.valuation().Evaluate(winners)));
    }
    case MechanismId::kRandomSm:
      return RandomMechSm(NeedSetInstance(id, instance), bids);
    case MechanismId::kDetSm:
      return Single(
          DetMechSm(NeedSetInstance(id, instance), bids, BruteForceOracle()));
    case MechanismId::kGreK: {
      const Instance& inst = NeedAdditive(id, instance);
      const GreKnapsackResult gre = GreKnapsack(inst, bids);
      auto payments = KnapsackPaymentFormula(inst, bids, gre.winners,
                                             gre.stop_item,
                                             PaymentContext::kGreedyAlone);
      return Single(Outcome::Make(gre.winners, std::move(payments),
                                  inst.valuation().Evaluate(gre.winners)));
    }
    case MechanismId::kMechK:
      return Single(MechKnapsack(NeedAdditive(id, instance), bids));
    case MechanismId::kRmK:
      return RmKnapsack(NeedAdditive(id, instance), bids);
    case MechanismId::kGreH: {
      const HeteroInstance inst = NeedHetero(id, instance);
      const AgentSet winners = GreH(inst, bids).winners;
      auto payments =
          ThresholdPayments(GreHRule(inst), bids, winners, inst.budget());
      return Single(
          Outcome::Make(winners, std::move(payments), inst.Value(winners)));
    }
    case MechanismId::kMhk:
      return Single(Mhk(NeedHetero(id, instance), bids));
    case MechanismId::kRmhk:
      return Rmhk(NeedHetero(id, instance), bids);
  }
  throw ContractViolation("unhandled mechanism");
}

AllocationRule MakeAllocationRule(MechanismId id, const AnyInstance& instance) {
  switch (id) {
    case MechanismId::kGreedySm:
      return GreedySmRule(NeedSetInstance(id, instance));
    case MechanismId::kDetSm:
      return DetMechSmRule(NeedSetInstance(id, instance), BruteForceOracle());
    case MechanismId::kGreK:
      return GreKnapsackRule(NeedAdditive(id, instance));
    case MechanismId::kMechK:
      return MechKnapsackRule(NeedAdditive(id, instance));
    case MechanismId::kGreH:
      return GreHRule(NeedHetero(id, instance));
    case MechanismId::kMhk:
      return MhkRule(NeedHetero(id, instance));
    default:
      throw ContractViolation(std::string(MechanismName(id)) +
                              " is randomized and has no single allocation rule");
  }
}

std::vector<NamedRule> DeterministicRules(const AnyInstance& instance) {
  std::vector<NamedRule> rules;
  auto add = [&](MechanismId id) {
    rules.push_back({std::string(MechanismName(id)),
                     MakeAllocationRule(id, instance)});
  };
  if (const auto* plain = std::get_if<Instance>(&instance)) {
    add(MechanismId::kGreedySm);
    add(MechanismId::kDetSm);
    if (IsAdditive(instance)) {
      add(MechanismId::kGreK);
      add(MechanismId::kMechK);
    }
    rules.push_back({"best-singleton", BestSingletonRule(*plain)});
  } else {
    const HeteroInstance& typed = std::get<HeteroInstance>(instance);
    add(MechanismId::kGreH);
    add(MechanismId::kMhk);
    rules.push_back({"best-singleton", [typed](const BidProfile& bids) -> AgentSet {
                       const auto best = BestHeteroItem(
                           typed, Eligible(bids, typed.budget()));
                       if (!best) return {};
                       return {*best};
                     }});
  }
  return rules;
}

std::optional<Real> RatioBound(MechanismId id) {
  const Real one(Num(1));
  switch (id) {
    case MechanismId::kRandomSm: {
      const Real e = Real::E();
      return Real(Num(5)) * e / (e - one);
    }
    case MechanismId::kDetSm:
      return DetMechSmFactor() + one;
    case MechanismId::kMechK:
    case MechanismId::kMhk:
      return Real(Num(2)) + Real::Sqrt2();
    case MechanismId::kRmK:
    case MechanismId::kRmhk:
      return Real(Num(3));
    default:
      return std::nullopt;
  }
}

}  // namespace bfm
