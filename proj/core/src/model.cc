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

#include "bfm/model.h"

#include <algorithm>
#include <bit>
#include <sstream>

#include "bfm/errors.h"

namespace bfm {

AgentSet MakeAgentSet(std::vector<AgentId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

AgentSet SetFromMask(std::uint64_t mask) {
  AgentSet out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

std::uint64_t MaskFromSet(std::span<const AgentId> set) {
  std::uint64_t mask = 0;
  for (AgentId i : set) {
    if (i < 0 || i >= 64) throw ContractViolation("agent id out of mask range");
    mask |= std::uint64_t{1} << i;
  }
  return mask;
}

bool Contains(std::span<const AgentId> set, AgentId id) {
  return std::find(set.begin(), set.end(), id) != set.end();
}

std::string ToString(std::span<const AgentId> set) {
  std::ostringstream out;
  out << '{';
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (k > 0) out << ',';
    out << set[k];
  }
  out << '}';
  return out.str();
}

Valuation Valuation::Additive(std::vector<Num> values) {
  for (const Num& v : values) {
    if (v < 0) throw InputError("additive valuation with a negative value");
  }
  const int n = static_cast<int>(values.size());
  return Valuation(n, std::make_shared<const Data>(AdditiveData{std::move(values)}));
}

Valuation Valuation::Explicit(int ground_size, std::vector<Num> table) {
  if (ground_size < 0 || ground_size > kMaxExplicitAgents) {
    throw LimitError("explicit valuations support at most 24 agents");
  }
  if (table.size() != (std::size_t{1} << ground_size)) {
    throw MalformedValuationError("explicit valuation must list all 2^n subsets");
  }
  if (table[0] != 0) throw MalformedValuationError("explicit valuation has v(empty) != 0");
  for (const Num& v : table) {
    if (v < 0) throw MalformedValuationError("explicit valuation with a negative value");
  }
  return Valuation(ground_size,
                   std::make_shared<const Data>(ExplicitData{std::move(table)}));
}

Valuation Valuation::Coverage(std::vector<std::vector<int>> covers,
                              std::vector<Num> element_weights) {
  const int universe = static_cast<int>(element_weights.size());
  for (const Num& w : element_weights) {
    if (w < 0) throw InputError("coverage valuation with a negative weight");
  }
  for (auto& c : covers) {
    for (int e : c) {
      if (e < 0 || e >= universe) {
        throw InputError("coverage valuation covers an unknown element");
      }
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  const int n = static_cast<int>(covers.size());
  return Valuation(n, std::make_shared<const Data>(CoverageData{
                          std::move(covers), std::move(element_weights)}));
}

Valuation::Kind Valuation::kind() const {
  switch (data_->index()) {
    case 0:
      return Kind::kAdditive;
    case 1:
      return Kind::kExplicit;
    default:
      return Kind::kCoverage;
  }
}

Num Valuation::Evaluate(std::span<const AgentId> set) const {
  for (AgentId i : set) {
    if (i < 0 || i >= ground_size_) {
      throw MalformedValuationError("valuation has no entry for agent " +
                                    std::to_string(i));
    }
  }
  if (const auto* a = std::get_if<AdditiveData>(data_.get())) {
    Num total = 0;
    for (AgentId i : set) total += a->values[i];
    return total;
  }
  if (const auto* e = std::get_if<ExplicitData>(data_.get())) {
    return e->table[MaskFromSet(set)];
  }
  const auto& c = std::get<CoverageData>(*data_);
  std::vector<char> covered(c.weights.size(), 0);
  Num total = 0;
  for (AgentId i : set) {
    for (int element : c.covers[i]) {
      if (!covered[element]) {
        covered[element] = 1;
        total += c.weights[element];
      }
    }
  }
  return total;
}

Num Valuation::Marginal(std::span<const AgentId> set, AgentId i) const {
  if (Contains(set, i)) return 0;
  if (const auto* a = std::get_if<AdditiveData>(data_.get())) {
    if (i < 0 || i >= ground_size_) {
      throw MalformedValuationError("valuation has no entry for agent " +
                                    std::to_string(i));
    }
    return a->values[i];
  }
  std::vector<AgentId> with(set.begin(), set.end());
  with.push_back(i);
  return Evaluate(with) - Evaluate(set);
}

Num Valuation::Singleton(AgentId i) const {
  const AgentId s[] = {i};
  return Evaluate(s);
}

const std::vector<Num>& Valuation::additive_values() const {
  const auto* a = std::get_if<AdditiveData>(data_.get());
  if (a == nullptr) throw ContractViolation("valuation is not additive");
  return a->values;
}

const std::vector<Num>& Valuation::explicit_table() const {
  const auto* e = std::get_if<ExplicitData>(data_.get());
  if (e == nullptr) throw ContractViolation("valuation is not explicit");
  return e->table;
}

const std::vector<std::vector<int>>& Valuation::covers() const {
  const auto* c = std::get_if<CoverageData>(data_.get());
  if (c == nullptr) throw ContractViolation("valuation is not a coverage function");
  return c->covers;
}

const std::vector<Num>& Valuation::element_weights() const {
  const auto* c = std::get_if<CoverageData>(data_.get());
  if (c == nullptr) throw ContractViolation("valuation is not a coverage function");
  return c->weights;
}

namespace {

void RequireSmallGround(const Valuation& valuation, int n) {
  if (n > Valuation::kMaxExplicitAgents) {
    throw LimitError("exhaustive valuation checks support at most 24 agents");
  }
  if (n < 0 || n > valuation.ground_size()) {
    throw ContractViolation("check size exceeds the valuation's ground set");
  }
}

// All 2^n values, indexed by mask.
std::vector<Num> Tabulate(const Valuation& valuation, int n) {
  if (valuation.kind() == Valuation::Kind::kExplicit &&
      n == valuation.ground_size()) {
    return valuation.explicit_table();
  }
  std::vector<Num> table(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = valuation.Evaluate(SetFromMask(mask));
  }
  return table;
}

}  // namespace

SubmodularityCheck CheckSubmodular(const Valuation& valuation, int n) {
  RequireSmallGround(valuation, n);
  const std::vector<Num> v = Tabulate(valuation, n);
  for (std::uint64_t s = 0; s < v.size(); ++s) {
    for (int i = 0; i < n; ++i) {
      const std::uint64_t bi = std::uint64_t{1} << i;
      if (s & bi) continue;
      for (int j = i + 1; j < n; ++j) {
        const std::uint64_t bj = std::uint64_t{1} << j;
        if (s & bj) continue;
        if (v[s | bi] + v[s | bj] < v[s] + v[s | bi | bj]) {
          return {false, std::make_pair(SetFromMask(s | bi), SetFromMask(s | bj))};
        }
      }
    }
  }
  return {};
}

bool CheckMonotoneValuation(const Valuation& valuation, int n) {
  RequireSmallGround(valuation, n);
  const std::vector<Num> v = Tabulate(valuation, n);
  for (std::uint64_t s = 0; s < v.size(); ++s) {
    for (int i = 0; i < n; ++i) {
      const std::uint64_t bi = std::uint64_t{1} << i;
      if (!(s & bi) && v[s | bi] < v[s]) return false;
    }
  }
  return true;
}

Instance::Instance(Num budget, std::vector<Agent> agents, Valuation valuation)
    : budget_(std::move(budget)),
      agents_(std::move(agents)),
      valuation_(std::move(valuation)) {
  if (budget_ <= 0) throw InputError("budget must be positive");
  for (std::size_t k = 0; k < agents_.size(); ++k) {
    if (agents_[k].id != static_cast<AgentId>(k)) {
      throw InputError("agent ids must be 0..n-1 in order");
    }
    if (agents_[k].cost < 0) throw InputError("negative agent cost");
  }
  if (valuation_.ground_size() != size()) {
    throw InputError("valuation ground set size differs from the agent count");
  }
}

std::vector<Num> Instance::costs() const {
  std::vector<Num> out;
  out.reserve(agents_.size());
  for (const Agent& a : agents_) out.push_back(a.cost);
  return out;
}

BidProfile::BidProfile(std::vector<Num> bids) : bids_(std::move(bids)) {
  for (const Num& b : bids_) {
    if (b < 0) throw InputError("negative bid");
  }
}

BidProfile BidProfile::Truthful(const Instance& instance) {
  return BidProfile(instance.costs());
}

BidProfile BidProfile::WithBid(AgentId i, Num bid) const {
  BidProfile out = *this;
  if (bid < 0) throw InputError("negative bid");
  out.bids_.at(i) = std::move(bid);
  return out;
}

std::string BidProfile::ToString() const {
  std::string out = "(";
  for (std::size_t k = 0; k < bids_.size(); ++k) {
    if (k > 0) out += ",";
    out += bfm::ToString(bids_[k]);
  }
  return out + ")";
}

AgentSet Eligible(const BidProfile& bids, const Num& budget) {
  AgentSet out;
  for (AgentId i = 0; i < bids.size(); ++i) {
    if (bids[i] <= budget) out.push_back(i);
  }
  return out;
}

Outcome Outcome::Make(AgentSet winners, std::map<AgentId, Num> payments,
                      Num value) {
  winners = MakeAgentSet(std::move(winners));
  if (payments.size() != winners.size()) {
    throw ContractViolation("payments must be defined exactly on the winners");
  }
  Num total = 0;
  for (AgentId w : winners) {
    const auto it = payments.find(w);
    if (it == payments.end()) {
      throw ContractViolation("missing payment for winner " + std::to_string(w));
    }
    total += it->second;
  }
  return Outcome{std::move(winners), std::move(payments), std::move(value),
                 std::move(total)};
}

bool IsIndividuallyRational(const Outcome& outcome, const BidProfile& bids) {
  for (const auto& [agent, payment] : outcome.payments) {
    if (payment < bids[agent]) return false;
  }
  return true;
}

RandomizedOutcome::RandomizedOutcome(std::vector<Branch> branches)
    : branches_(std::move(branches)) {
  Num total = 0;
  for (const Branch& b : branches_) {
    if (b.probability <= 0) throw ContractViolation("branch probability must be > 0");
    total += b.probability;
  }
  if (total != 1) throw ContractViolation("branch probabilities must sum to 1");
}

Num RandomizedOutcome::ExpectedValue() const {
  Num total = 0;
  for (const Branch& b : branches_) total += b.probability * b.outcome.value;
  return total;
}

Num RandomizedOutcome::ExpectedPayment() const {
  Num total = 0;
  for (const Branch& b : branches_) {
    total += b.probability * b.outcome.total_payment;
  }
  return total;
}

}  // namespace bfm
