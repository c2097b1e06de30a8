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

#ifndef BFM_MECHANISMS_H_
#define BFM_MECHANISMS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bfm/hetero_mech.h"
#include "bfm/model.h"
#include "bfm/num.h"
#include "bfm/real.h"
#include "bfm/threshold.h"

namespace bfm {

enum class MechanismId {
  kGreedySm,  // greedy_sm(A, B/2) with threshold payments
  kRandomSm,
  kDetSm,
  kGreK,      // gre on its own with the payment formula
  kMechK,
  kRmK,
  kGreH,      // gre_h on its own with threshold payments
  kMhk,
  kRmhk,
};

std::span<const MechanismId> AllMechanisms();
std::string_view MechanismName(MechanismId id);
// Throws InputError listing the valid names.
MechanismId ParseMechanism(std::string_view name);
bool IsRandomized(MechanismId id);

using AnyInstance = std::variant<Instance, HeteroInstance>;

struct NamedInstance {
  std::string id;
  AnyInstance instance;
};

int InstanceSize(const AnyInstance& instance);
const Num& InstanceBudget(const AnyInstance& instance);
BidProfile TruthfulBids(const AnyInstance& instance);
bool IsAdditive(const AnyInstance& instance);
// Value of a winner set.
Num SetValue(const AnyInstance& instance, std::span<const AgentId> set);
// Integral optimum under the given costs, by enumeration.
Num OptValue(const AnyInstance& instance, const BidProfile& costs);

// Runs a mechanism; deterministic ones come back as one branch of
// probability 1. Throws InputError when the instance kind does not fit
// (knapsack mechanisms need additive valuations; heterogeneous mechanisms
// also accept additive instances, one type per agent).
RandomizedOutcome RunMechanism(MechanismId id, const AnyInstance& instance,
                               const BidProfile& bids);

// Allocation rule of a deterministic mechanism; ContractViolation for
// randomized ones.
AllocationRule MakeAllocationRule(MechanismId id, const AnyInstance& instance);

struct NamedRule {
  std::string name;
  AllocationRule rule;
};

// Every deterministic allocation rule that applies to the instance: the
// submodular ones, the knapsack ones when additive, the heterogeneous ones
// for typed instances, and the {i*} rule.
std::vector<NamedRule> DeterministicRules(const AnyInstance& instance);

// Proven approximation bound, if any: 5e/(e-1), x+1, 2+sqrt2 or 3.
std::optional<Real> RatioBound(MechanismId id);

}  // namespace bfm

#endif  // BFM_MECHANISMS_H_
