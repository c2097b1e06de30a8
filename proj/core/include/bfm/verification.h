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

#ifndef BFM_VERIFICATION_H_
#define BFM_VERIFICATION_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bfm/hetero_mech.h"
#include "bfm/mechanisms.h"
#include "bfm/model.h"
#include "bfm/num.h"

namespace bfm {

// Outcome of one property check on one instance. Failures carry a witness
// that replays the violation (bids, agent, observed values).
struct PropertyReport {
  std::string property;
  std::string instance_id;
  bool pass = true;
  std::string witness;
};

inline constexpr int kMaxStructuredItems = 10;
inline constexpr int kMaxStructuredTypes = 4;

// Independent fractional optimum for typed instances: every type-feasible
// integral selection, optionally with one type split between two of its
// points (the virtual zero item included), the split fraction chosen at an
// endpoint of its feasible interval. LimitError beyond 10 items or 4 types.
Num StructuredFractionalOptHetero(const HeteroInstance& instance,
                                  const BidProfile& costs, const Num& budget);

// Sampled monotonicity: from the base profile, each winner moves its bid
// down to b (k + r) / N and each eligible loser moves up to
// b + (B - b)(k + 1 - r) / N, k = 0..N-1, r in [0,1) drawn from
// mt19937_64(seed). The first switch is reported.
struct MonotonicityGrid {
  int perturbations = 32;
};

PropertyReport CheckMonotoneAllocation(const NamedRule& rule,
                                       const BidProfile& base, const Num& budget,
                                       const std::string& instance_id,
                                       std::uint64_t seed,
                                       MonotonicityGrid grid = {});

// Ascending-ratio greedy filling the full budget: not monotone. Exists to
// show the monotonicity checker can fail.
NamedRule PlantedBugRule(const Instance& additive);

// Every branch pays at most B in total, and every winner at least its bid.
PropertyReport CheckBudgetFeasible(const std::string& mechanism,
                                   const RandomizedOutcome& outcome,
                                   const BidProfile& bids, const Num& budget,
                                   const std::string& instance_id);

// Threshold of each greedy_sm winner j is at most m_j B / v(S); of each
// gre_h winner j at most (v(j) - v(r)) B / v(S) + b(r) and v(j) B / v(S),
// r the item j displaced. Slack 2^-50 B.
PropertyReport CheckPaymentUpperBounds(const NamedInstance& instance,
                                       const BidProfile& bids);

// (v(T) - v(S)) / (c(T) - c(S)) <= m_S(t0) / c(t0) with t0 the best ratio in
// T - S. ContractViolation unless S is a strict subset of T and
// c(T) > c(S).
bool CheckLemmaAverage(const Valuation& valuation, const BidProfile& costs,
                       std::span<const AgentId> s, std::span<const AgentId> t);

// CheckLemmaAverage on seeded random pairs S strict subset of T.
PropertyReport CheckLemmaAverageSampled(const Instance& instance,
                                        const std::string& instance_id,
                                        std::uint64_t seed, int samples);

// opt <= e/(e-1) (3 v(greedy_sm(A, B/2)) + 2 v(i*)).
PropertyReport CheckOptUpperBound(const Instance& instance,
                                  const std::string& instance_id);

// fgre(A) >= (1 - 1/e) opt(A).
PropertyReport CheckFractionalGreedy(const Instance& instance,
                                     const std::string& instance_id);

// When gre stops early: fopt(A) < 2 v(S) + v(i*). Passes vacuously
// otherwise.
PropertyReport CheckKnapsackChain(const Instance& instance,
                                  const std::string& instance_id);

// fhk equals the structured oracle, and its alpha has at most two nonzero
// entries per type with at most one such type.
PropertyReport CheckFhkOptimal(const HeteroInstance& instance,
                               const std::string& instance_id);

struct RatioRow {
  std::string instance_id;
  std::string mechanism;
  Num value;  // expected value for randomized mechanisms
  Num opt;
  bool infinite = false;  // value 0 with opt > 0
  Num ratio;              // opt / value; 1 when opt = 0
  bool pass = true;       // ratio within the proven bound, if any
  std::string witness;
};

RatioRow ApproximationRow(MechanismId id, const NamedInstance& instance);
std::vector<RatioRow> ApproximationReport(MechanismId id,
                                          std::span<const NamedInstance> suite);

// Mechanisms that accept the instance.
std::vector<MechanismId> ApplicableMechanisms(const AnyInstance& instance);

// Every applicable check on one instance at truthful bids.
std::vector<PropertyReport> RunAllChecks(const NamedInstance& instance,
                                         std::uint64_t seed);

}  // namespace bfm

#endif  // BFM_VERIFICATION_H_
