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

#ifndef BFM_MODEL_H_
#define BFM_MODEL_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bfm/num.h"

namespace bfm {

using AgentId = int;

// Sorted, duplicate-free list of agent ids.
using AgentSet = std::vector<AgentId>;

AgentSet MakeAgentSet(std::vector<AgentId> ids);
AgentSet SetFromMask(std::uint64_t mask);
std::uint64_t MaskFromSet(std::span<const AgentId> set);
bool Contains(std::span<const AgentId> set, AgentId id);
std::string ToString(std::span<const AgentId> set);

// Publicly known set function v over agents 0..n-1. Monotone with v(empty)=0
// is assumed by every mechanism; CheckMonotoneValuation and CheckSubmodular
// verify it exhaustively for small ground sets.
class Valuation {
 public:
  enum class Kind { kAdditive, kExplicit, kCoverage };

  static constexpr int kMaxExplicitAgents = 24;

  // v(S) = sum of values[i] over i in S.
  static Valuation Additive(std::vector<Num> values);
  // table[mask] = v(S) for the subset S encoded by mask; must hold 2^n
  // entries with table[0] == 0.
  static Valuation Explicit(int ground_size, std::vector<Num> table);
  // Agent i covers the element indices covers[i]; v(S) is the total weight of
  // the union of covered elements.
  static Valuation Coverage(std::vector<std::vector<int>> covers,
                            std::vector<Num> element_weights);

  Kind kind() const;
  int ground_size() const { return ground_size_; }

  Num Evaluate(std::span<const AgentId> set) const;
  // m_S(i) = v(S + i) - v(S).
  Num Marginal(std::span<const AgentId> set, AgentId i) const;
  Num Singleton(AgentId i) const;

  // Kind-specific payloads. Each throws ContractViolation on the wrong kind.
  const std::vector<Num>& additive_values() const;
  const std::vector<Num>& explicit_table() const;
  const std::vector<std::vector<int>>& covers() const;
  const std::vector<Num>& element_weights() const;

 private:
  struct AdditiveData {
    std::vector<Num> values;
  };
  struct ExplicitData {
    std::vector<Num> table;
  };
  struct CoverageData {
    std::vector<std::vector<int>> covers;
    std::vector<Num> weights;
  };
  using Data = std::variant<AdditiveData, ExplicitData, CoverageData>;

  Valuation(int ground_size, std::shared_ptr<const Data> data)
      : ground_size_(ground_size), data_(std::move(data)) {}

  int ground_size_ = 0;
  std::shared_ptr<const Data> data_;
};

struct SubmodularityCheck {
  bool submodular = true;
  // A pair (S, T) with v(S) + v(T) < v(S & T) + v(S | T).
  std::optional<std::pair<AgentSet, AgentSet>> witness;
};

// Exhaustive over the first n agents; n <= 24 or LimitError. Uses the
// equivalent local form m_S(i) >= m_{S+j}(i) for all S and i, j not in S.
SubmodularityCheck CheckSubmodular(const Valuation& valuation, int n);

// True iff v(S) <= v(S + i) for all S and i; n <= 24 or LimitError.
bool CheckMonotoneValuation(const Valuation& valuation, int n);

struct Agent {
  AgentId id = 0;
  Num cost;  // true private cost
};

class Instance {
 public:
  // Throws InputError unless budget > 0, ids are 0..n-1 in order, costs are
  // nonnegative and the valuation's ground set has n agents.
  Instance(Num budget, std::vector<Agent> agents, Valuation valuation);

  const Num& budget() const { return budget_; }
  std::span<const Agent> agents() const { return agents_; }
  const Valuation& valuation() const { return valuation_; }
  int size() const { return static_cast<int>(agents_.size()); }
  std::vector<Num> costs() const;

 private:
  Num budget_;
  std::vector<Agent> agents_;
  Valuation valuation_;
};

// One declared cost per agent, indexed by agent id.
class BidProfile {
 public:
  BidProfile() = default;
  explicit BidProfile(std::vector<Num> bids);

  static BidProfile Truthful(const Instance& instance);

  const Num& operator[](AgentId i) const { return bids_.at(i); }
  int size() const { return static_cast<int>(bids_.size()); }
  std::span<const Num> values() const { return bids_; }
  BidProfile WithBid(AgentId i, Num bid) const;
  std::string ToString() const;

 private:
  std::vector<Num> bids_;
};

// Agents whose bid does not exceed the budget, in id order.
AgentSet Eligible(const BidProfile& bids, const Num& budget);

struct Outcome {
  AgentSet winners;
  std::map<AgentId, Num> payments;
  Num value;
  Num total_payment;

  // Checks that payments are defined exactly on the winners and sums them.
  static Outcome Make(AgentSet winners, std::map<AgentId, Num> payments,
                      Num value);
  static Outcome Empty() { return Make({}, {}, Num(0)); }
};

// p_i >= b_i for every winner.
bool IsIndividuallyRational(const Outcome& outcome, const BidProfile& bids);

struct Branch {
  Num probability;
  Outcome outcome;
};

// Finite distribution over deterministic outcomes; probabilities are
// positive and sum to exactly 1.
class RandomizedOutcome {
 public:
  explicit RandomizedOutcome(std::vector<Branch> branches);

  std::span<const Branch> branches() const { return branches_; }
  Num ExpectedValue() const;
  Num ExpectedPayment() const;

 private:
  std::vector<Branch> branches_;
};

}  // namespace bfm

#endif  // BFM_MODEL_H_
