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

#ifndef BFM_SUITE_H_
#define BFM_SUITE_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "bfm/mechanisms.h"
#include "bfm/model.h"
#include "bfm/num.h"

namespace bfm {

// mt19937_64 plus an explicit rejection sampler, so draws do not depend on
// the standard library's distribution implementations.
class SuiteRng {
 public:
  explicit SuiteRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform integer in [lo, hi].
  std::int64_t Uniform(std::int64_t lo, std::int64_t hi);
  bool Coin() { return (Next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

enum class Family { kAdditive, kSubmodular, kHetero };

std::string_view FamilyName(Family family);
// Throws InputError on an unknown name.
Family ParseFamily(std::string_view name);

inline constexpr int kSuiteMaxAgents = 10;
inline constexpr int kSuiteMaxTypes = 4;

// Additive: 1..10 agents, integer values 1..20, costs k/4 up to a random
// fraction of B. Distinct-ratio instances have pairwise distinct v_i / c_i
// and positive costs.
Instance RandomAdditive(SuiteRng& rng, int max_agents, bool distinct_ratios);
// Coverage or budget-additive min(cap, sum of weights), alternating.
Instance RandomSubmodular(SuiteRng& rng, int max_agents);
// At most 10 items over at most 4 types.
HeteroInstance RandomHetero(SuiteRng& rng, int max_items, int max_types);

// count instances named "<family>-<seed>-<index>".
std::vector<NamedInstance> GenerateSuite(Family family, std::uint64_t seed,
                                         int count);

}  // namespace bfm

#endif  // BFM_SUITE_H_
