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

#include "bfm/brute_force.h"

#include <set>
#include <string>
#include <vector>

#include "bfm/errors.h"

namespace bfm {
namespace {

void RequireSmall(std::size_t n) {
  if (n > static_cast<std::size_t>(kMaxBruteForceAgents)) {
    throw LimitError("brute-force optimum supports at most " +
                     std::to_string(kMaxBruteForceAgents) + " agents, got " +
                     std::to_string(n));
  }
}

void Offer(const Num& value, const AgentSet& set, OptResult& best) {
  if (value > best.value || (value == best.value && set < best.set)) {
    best.value = value;
    best.set = set;
  }
}

// Include/exclude enumeration with budget pruning. For additive valuations
// the running value plus all remaining values bounds the subtree.
class Enumerator {
 public:
  Enumerator(const Valuation* valuation, const HeteroInstance* hetero,
             const BidProfile& costs, std::span<const AgentId> candidates,
             const Num& budget)
      : valuation_(valuation),
        hetero_(hetero),
        costs_(costs),
        candidates_(candidates.begin(), candidates.end()),
        budget_(budget) {
    additive_ = hetero_ != nullptr ||
                valuation_->kind() == Valuation::Kind::kAdditive;
    suffix_.assign(candidates_.size() + 1, Num(0));
    if (additive_) {
      for (std::size_t k = candidates_.size(); k-- > 0;) {
        suffix_[k] = suffix_[k + 1] + ItemValue(candidates_[k]);
      }
    }
  }

  OptResult Run() {
    best_ = OptResult{Num(0), {}};
    Visit(0, Num(0), Num(0));
    return best_;
  }

 private:
  Num ItemValue(AgentId i) const {
    if (hetero_ != nullptr) return hetero_->item(i).value;
    return valuation_->additive_values()[i];
  }

  void Visit(std::size_t k, const Num& cost, const Num& value) {
    if (additive_ && value + suffix_[k] < best_.value) return;
    if (k == candidates_.size()) {
      AgentSet set = MakeAgentSet(chosen_);
      Offer(additive_ ? value : valuation_->Evaluate(set), set, best_);
      return;
    }
    const AgentId i = candidates_[k];
    const Num with_cost = cost + costs_[i];
    if (with_cost <= budget_ && TypeFree(i)) {
      chosen_.push_back(i);
      if (hetero_ != nullptr) used_types_.insert(hetero_->item(i).type);
      Visit(k + 1, with_cost, additive_ ? value + ItemValue(i) : value);
      if (hetero_ != nullptr) used_types_.erase(hetero_->item(i).type);
      chosen_.pop_back();
    }
    Visit(k + 1, cost, value);
  }

  bool TypeFree(AgentId i) const {
    return hetero_ == nullptr || !used_types_.contains(hetero_->item(i).type);
  }

  const Valuation* valuation_;
  const HeteroInstance* hetero_;
  const BidProfile& costs_;
  std::vector<AgentId> candidates_;
  const Num& budget_;
  bool additive_ = false;
  std::vector<Num> suffix_;
  std::vector<AgentId> chosen_;
  std::multiset<int> used_types_;
  OptResult best_;
};

AgentSet AllAgents(int n) {
  AgentSet out(n);
  for (int i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace

OptResult BruteForceOpt(const Valuation& valuation, const BidProfile& costs,
                        std::span<const AgentId> candidates, const Num& budget) {
  RequireSmall(candidates.size());
  return Enumerator(&valuation, nullptr, costs, candidates, budget).Run();
}

OptResult BruteForceOpt(const Instance& instance, const BidProfile& costs) {
  const AgentSet all = AllAgents(instance.size());
  return BruteForceOpt(instance.valuation(), costs, all, instance.budget());
}

OptResult BruteForceOpt(const HeteroInstance& instance, const BidProfile& costs,
                        std::span<const AgentId> candidates, const Num& budget) {
  RequireSmall(candidates.size());
  return Enumerator(nullptr, &instance, costs, candidates, budget).Run();
}

OptResult BruteForceOpt(const HeteroInstance& instance, const BidProfile& costs) {
  const AgentSet all = AllAgents(instance.size());
  return BruteForceOpt(instance, costs, all, instance.budget());
}

}  // namespace bfm
