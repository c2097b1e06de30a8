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

#ifndef BFM_BRUTE_FORCE_H_
#define BFM_BRUTE_FORCE_H_

#include <span>

#include "bfm/hetero_mech.h"
#include "bfm/model.h"
#include "bfm/num.h"

namespace bfm {

inline constexpr int kMaxBruteForceAgents = 20;

struct OptResult {
  Num value;
  AgentSet set;  // lexicographically smallest among optimal sets
};

// max v(S) over S within candidates with sum of costs <= budget, by
// exhaustive enumeration. More than 20 candidates -> LimitError.
OptResult BruteForceOpt(const Valuation& valuation, const BidProfile& costs,
                        std::span<const AgentId> candidates, const Num& budget);

// Same, over all agents of the instance at the given costs.
OptResult BruteForceOpt(const Instance& instance, const BidProfile& costs);

// Heterogeneous version: additionally at most one item per type.
OptResult BruteForceOpt(const HeteroInstance& instance, const BidProfile& costs,
                        std::span<const AgentId> candidates, const Num& budget);
OptResult BruteForceOpt(const HeteroInstance& instance, const BidProfile& costs);

}  // namespace bfm

#endif  // BFM_BRUTE_FORCE_H_
