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

#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "bfm/brute_force.h"
#include "bfm/hetero_mech.h"
#include "bfm/knapsack_mech.h"
#include "bfm/mechanisms.h"
#include "bfm/submodular_mech.h"
#include "bfm/suite.h"
#include "bfm/threshold.h"

namespace bfm {
namespace {

std::vector<NamedInstance> Suite(Family f) { return GenerateSuite(f, 7, 64); }

void BM_GreKnapsack(benchmark::State& state) {
  const auto suite = Suite(Family::kAdditive);
  std::size_t k = 0;
  for (auto _ : state) {
    const Instance& inst = std::get<Instance>(suite[k++ % suite.size()].instance);
    benchmark::DoNotOptimize(GreKnapsack(inst, BidProfile::Truthful(inst)));
  }
}
BENCHMARK(BM_GreKnapsack);

void BM_FoptKnapsack(benchmark::State& state) {
  const auto suite = Suite(Family::kAdditive);
  std::size_t k = 0;
  for (auto _ : state) {
    const Instance& inst = std::get<Instance>(suite[k++ % suite.size()].instance);
    const BidProfile c = BidProfile::Truthful(inst);
    benchmark::DoNotOptimize(FoptKnapsack(inst.valuation().additive_values(), c,
                                          Eligible(c, inst.budget()), inst.budget()));
  }
}
BENCHMARK(BM_FoptKnapsack);

void BM_Fhk(benchmark::State& state) {
  const auto suite = Suite(Family::kHetero);
  std::size_t k = 0;
  for (auto _ : state) {
    const HeteroInstance& h = std::get<HeteroInstance>(suite[k++ % suite.size()].instance);
    const BidProfile c(h.costs());
    benchmark::DoNotOptimize(Fhk(h, c, Eligible(c, h.budget()), h.budget()));
  }
}
BENCHMARK(BM_Fhk);

void BM_BruteForceOpt(benchmark::State& state) {
  const auto suite = Suite(Family::kSubmodular);
  std::size_t k = 0;
  for (auto _ : state) {
    const Instance& inst = std::get<Instance>(suite[k++ % suite.size()].instance);
    benchmark::DoNotOptimize(BruteForceOpt(inst, BidProfile::Truthful(inst)));
  }
}
BENCHMARK(BM_BruteForceOpt);

void BM_ThresholdPayment(benchmark::State& state) {
  const auto suite = Suite(Family::kAdditive);
  std::size_t k = 0;
  for (auto _ : state) {
    const Instance& inst = std::get<Instance>(suite[k++ % suite.size()].instance);
    const BidProfile c = BidProfile::Truthful(inst);
    const AllocationRule rule = GreKnapsackRule(inst);
    const AgentSet winners = rule(c);
    if (winners.empty()) continue;
    benchmark::DoNotOptimize(ThresholdPayment(rule, c, winners.front(), inst.budget()));
  }
}
BENCHMARK(BM_ThresholdPayment);

// Whole mechanism, payments included, over the family it applies to.
void BM_RunMechanism(benchmark::State& state) {
  const auto id = static_cast<MechanismId>(state.range(0));
  const Family family = id == MechanismId::kGreH || id == MechanismId::kMhk ||
                                id == MechanismId::kRmhk
                            ? Family::kHetero
                            : Family::kAdditive;
  const auto suite = Suite(family);
  std::size_t k = 0;
  for (auto _ : state) {
    const NamedInstance& named = suite[k++ % suite.size()];
    benchmark::DoNotOptimize(
        RunMechanism(id, named.instance, TruthfulBids(named.instance)));
  }
  state.SetLabel(std::string(MechanismName(id)));
}
BENCHMARK(BM_RunMechanism)->DenseRange(0, 8)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace bfm

BENCHMARK_MAIN();
