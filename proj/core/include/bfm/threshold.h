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

#ifndef BFM_THRESHOLD_H_
#define BFM_THRESHOLD_H_

#include <functional>
#include <optional>

#include "bfm/model.h"
#include "bfm/num.h"

namespace bfm {

// A deterministic allocation rule over a fixed instance: bids -> winners.
using AllocationRule = std::function<AgentSet(const BidProfile&)>;

inline constexpr int kBisectionIterations = 60;

// Threshold bid of one agent under a monotone rule, bracketed by bisection on
// [0, B]. The agent wins at every bid below lo and loses above hi.
struct ThresholdResult {
  enum class Kind { kThreshold, kAlwaysWins, kNeverWins };

  Kind kind = Kind::kThreshold;
  Num lo;
  Num hi;
  // Simplest rational in [lo, hi], kept only if the rule wins just below it
  // and loses just above it (at distance 2^-70 B).
  std::optional<Num> exact;
  int iterations = 0;

  // What a winner is paid: B when it always wins, otherwise the exact
  // threshold if known, otherwise the upper bracket (never below the bid).
  Num Payment() const { return exact.value_or(hi); }
  // Conservative lower estimate: exact threshold if known, else lo.
  Num LowerBound() const { return exact.value_or(lo); }
};

// Throws PropertyViolation (with a replayable witness) when the agent loses
// at bid 0 but wins at bid B, or when the bracket fails its spot check.
ThresholdResult ThresholdPayment(const AllocationRule& rule,
                                 const BidProfile& bids, AgentId agent,
                                 const Num& budget);

// Threshold payments for every winner of rule(bids).
std::map<AgentId, Num> ThresholdPayments(const AllocationRule& rule,
                                         const BidProfile& bids,
                                         const AgentSet& winners,
                                         const Num& budget);

}  // namespace bfm

#endif  // BFM_THRESHOLD_H_
