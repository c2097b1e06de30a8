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

#include "bfm/threshold.h"

#include <string>

#include "bfm/errors.h"

namespace bfm {
namespace {

std::string Witness(const BidProfile& bids, AgentId agent, const Num& bid,
                    bool wins) {
  return "bids=" + bids.ToString() + " agent=" + std::to_string(agent) +
         " bid=" + ToString(bid) + (wins ? " wins" : " loses");
}

}  // namespace

ThresholdResult ThresholdPayment(const AllocationRule& rule,
                                 const BidProfile& bids, AgentId agent,
                                 const Num& budget) {
  auto wins = [&](const Num& b) {
    return Contains(rule(bids.WithBid(agent, b)), agent);
  };
  ThresholdResult result;
  const bool at_budget = wins(budget);
  const bool at_zero = wins(Num(0));
  if (at_budget && !at_zero) {
    throw PropertyViolation("non-monotone allocation",
                            Witness(bids, agent, Num(0), false) + "; " +
                                Witness(bids, agent, budget, true));
  }
  if (at_budget) {
    result.kind = ThresholdResult::Kind::kAlwaysWins;
    result.lo = result.hi = budget;
    result.exact = budget;
    return result;
  }
  if (!at_zero) {
    result.kind = ThresholdResult::Kind::kNeverWins;
    result.lo = result.hi = 0;
    result.exact = Num(0);
    return result;
  }

  Num lo = 0;
  Num hi = budget;
  for (int k = 0; k < kBisectionIterations; ++k) {
    Num mid = (lo + hi) / 2;
    if (wins(mid)) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  result.iterations = kBisectionIterations;

  const Num delta = ScaleByPow2(budget, kBisectionIterations);
  const Num below = lo - delta;
  if (below >= 0 && !wins(below)) {
    throw PropertyViolation("non-monotone allocation below the bracket",
                            Witness(bids, agent, below, false));
  }
  if (wins(hi + delta)) {
    throw PropertyViolation("non-monotone allocation above the bracket",
                            Witness(bids, agent, hi + delta, true));
  }

  Num candidate = SimplestRationalBetween(lo, hi);
  const Num eps = ScaleByPow2(budget, kBisectionIterations + 10);
  const Num just_below = Max(Num(0), candidate - eps);
  if (wins(just_below) && !wins(candidate + eps)) {
    result.exact = std::move(candidate);
  }
  result.lo = std::move(lo);
  result.hi = std::move(hi);
  return result;
}

std::map<AgentId, Num> ThresholdPayments(const AllocationRule& rule,
                                         const BidProfile& bids,
                                         const AgentSet& winners,
                                         const Num& budget) {
  std::map<AgentId, Num> payments;
  for (AgentId w : winners) {
    const ThresholdResult t = ThresholdPayment(rule, bids, w, budget);
    if (t.kind == ThresholdResult::Kind::kNeverWins) {
      throw PropertyViolation("winner with no winning bid",
                              Witness(bids, w, bids[w], true));
    }
    payments[w] = t.Payment();
  }
  return payments;
}

}  // namespace bfm
