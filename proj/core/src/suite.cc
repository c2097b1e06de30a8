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

#include "bfm/suite.h"

#include <algorithm>
#include <limits>
#include <set>
#include <utility>

#include "bfm/errors.h"

namespace bfm {

std::int64_t SuiteRng::Uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw ContractViolation("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(Next());
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = Next();
  while (x >= limit) x = Next();
  return lo + static_cast<std::int64_t>(x % span);
}

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kAdditive: return "additive";
    case Family::kSubmodular: return "submodular";
    case Family::kHetero: return "hetero";
  }
  return "?";
}

Family ParseFamily(std::string_view name) {
  for (Family f : {Family::kAdditive, Family::kSubmodular, Family::kHetero}) {
    if (FamilyName(f) == name) return f;
  }
  throw InputError("unknown family '" + std::string(name) +
                   "' (expected additive, submodular or hetero)");
}

namespace {

// Costs are multiples of 1/4 in (0, B * spread], spread drawn per instance.
struct CostScale {
  Num budget;
  std::int64_t max_quarters = 1;
};

CostScale DrawScale(SuiteRng& rng) {
  CostScale s;
  const std::int64_t b = rng.Uniform(4, 30);
  s.budget = b;
  static constexpr std::int64_t kSpreadTenths[] = {3, 5, 10, 12};
  const std::int64_t spread = kSpreadTenths[rng.Uniform(0, 3)];
  s.max_quarters = std::max<std::int64_t>(1, 4 * b * spread / 10);
  return s;
}

Num DrawCost(SuiteRng& rng, const CostScale& s) {
  Num c(rng.Uniform(1, s.max_quarters), 4);
  c.canonicalize();
  return c;
}

std::vector<Agent> MakeAgents(std::vector<Num> costs) {
  std::vector<Agent> agents;
  for (std::size_t i = 0; i < costs.size(); ++i) {
    agents.push_back({static_cast<AgentId>(i), std::move(costs[i])});
  }
  return agents;
}

}  // namespace

Instance RandomAdditive(SuiteRng& rng, int max_agents, bool distinct_ratios) {
  const CostScale scale = DrawScale(rng);
  const int n = static_cast<int>(rng.Uniform(1, max_agents));
  std::vector<Num> values;
  std::vector<Num> costs;
  std::set<Num> ratios;
  while (static_cast<int>(values.size()) < n) {
    Num v = rng.Uniform(1, 20);
    Num c = DrawCost(rng, scale);
    if (distinct_ratios) {
      Num r = v / c;
      r.canonicalize();
      if (!ratios.insert(r).second) continue;
    }
    values.push_back(std::move(v));
    costs.push_back(std::move(c));
  }
  return Instance(scale.budget, MakeAgents(std::move(costs)),
                  Valuation::Additive(std::move(values)));
}

Instance RandomSubmodular(SuiteRng& rng, int max_agents) {
  const CostScale scale = DrawScale(rng);
  const int n = static_cast<int>(rng.Uniform(1, max_agents));
  std::vector<Num> costs;
  for (int i = 0; i < n; ++i) costs.push_back(DrawCost(rng, scale));
  if (rng.Coin()) {
    const int universe = static_cast<int>(rng.Uniform(4, 12));
    std::vector<Num> weights;
    for (int e = 0; e < universe; ++e) weights.emplace_back(rng.Uniform(1, 5));
    std::vector<std::vector<int>> covers(n);
    for (auto& cover : covers) {
      const int size = static_cast<int>(rng.Uniform(1, 4));
      std::set<int> picked;
      while (static_cast<int>(picked.size()) < size) {
        picked.insert(static_cast<int>(rng.Uniform(0, universe - 1)));
      }
      cover.assign(picked.begin(), picked.end());
    }
    return Instance(scale.budget, MakeAgents(std::move(costs)),
                    Valuation::Coverage(std::move(covers), std::move(weights)));
  }
  // Budget-additive: min(cap, sum of weights) is monotone submodular.
  std::vector<Num> weights;
  Num total = 0;
  for (int i = 0; i < n; ++i) {
    weights.emplace_back(rng.Uniform(1, 20));
    total += weights.back();
  }
  const Num cap = rng.Uniform(1, std::max<std::int64_t>(1, total.get_num().get_si()));
  std::vector<Num> table(std::size_t{1} << n);
  for (std::size_t mask = 1; mask < table.size(); ++mask) {
    Num sum = 0;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) sum += weights[i];
    }
    table[mask] = Min(cap, sum);
  }
  return Instance(scale.budget, MakeAgents(std::move(costs)),
                  Valuation::Explicit(n, std::move(table)));
}

HeteroInstance RandomHetero(SuiteRng& rng, int max_items, int max_types) {
  const CostScale scale = DrawScale(rng);
  const int n = static_cast<int>(rng.Uniform(1, max_items));
  const int m = static_cast<int>(rng.Uniform(1, max_types));
  std::vector<HeteroItem> items;
  for (int i = 0; i < n; ++i) {
    items.push_back({i, DrawCost(rng, scale), Num(rng.Uniform(1, 20)),
                     static_cast<int>(rng.Uniform(0, m - 1))});
  }
  return HeteroInstance(scale.budget, std::move(items));
}

std::vector<NamedInstance> GenerateSuite(Family family, std::uint64_t seed,
                                         int count) {
  if (count < 0) throw InputError("count must be nonnegative");
  SuiteRng rng(seed);
  std::vector<NamedInstance> out;
  out.reserve(static_cast<std::size_t>(count));
  const std::string prefix =
      std::string(FamilyName(family)) + "-" + std::to_string(seed) + "-";
  for (int k = 0; k < count; ++k) {
    std::string id = prefix + std::to_string(k);
    switch (family) {
      case Family::kAdditive:
        out.push_back({std::move(id), RandomAdditive(rng, kSuiteMaxAgents, false)});
        break;
      case Family::kSubmodular:
        out.push_back({std::move(id), RandomSubmodular(rng, kSuiteMaxAgents)});
        break;
      case Family::kHetero:
        out.push_back({std::move(id),
                       RandomHetero(rng, kSuiteMaxAgents, kSuiteMaxTypes)});
        break;
    }
  }
  return out;
}

}  // namespace bfm
