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

#ifndef BFM_TESTS_FIXTURES_H_
#define BFM_TESTS_FIXTURES_H_

#include <string>
#include <vector>

#include "bfm/hetero_mech.h"
#include "bfm/model.h"
#include "bfm/num.h"

namespace bfm::testing {

inline Num Q(const std::string& text) { return ParseNum(text); }

inline Instance AdditiveInstance(const std::string& budget,
                                 const std::vector<std::string>& values,
                                 const std::vector<std::string>& costs) {
  std::vector<Num> v;
  std::vector<Agent> agents;
  for (std::size_t i = 0; i < values.size(); ++i) {
    v.push_back(Q(values[i]));
    agents.push_back({static_cast<AgentId>(i), Q(costs[i])});
  }
  return Instance(Q(budget), std::move(agents), Valuation::Additive(std::move(v)));
}

// v = (6, 5, 4), c = (2, 3, 5).
inline Instance K1(const std::string& budget = "10") {
  return AdditiveInstance(budget, {"6", "5", "4"}, {"2", "3", "5"});
}

// v = (6, 5, 4), c = (4, 5, 5), B = 10.
inline Instance K2() {
  return AdditiveInstance("10", {"6", "5", "4"}, {"4", "5", "5"});
}

// Agent 0 covers {x, y}, agent 1 covers {y, z}, agent 2 covers {z}; unit
// weights and unit costs.
inline Valuation CoverageFixture() {
  return Valuation::Coverage({{0, 1}, {1, 2}, {2}}, {Num(1), Num(1), Num(1)});
}

inline Instance CoverageInstance(const std::string& budget = "3") {
  return Instance(Q(budget), {{0, Num(1)}, {1, Num(1)}, {2, Num(1)}},
                  CoverageFixture());
}

// Type 0: a1 (2, 4), a2 (5, 6); type 1: b1 (3, 3). Ids a1 = 0, a2 = 1, b1 = 2.
inline HeteroInstance H1(const std::string& budget = "6") {
  return HeteroInstance(Q(budget), {{0, Num(2), Num(4), 0},
                                    {1, Num(5), Num(6), 0},
                                    {2, Num(3), Num(3), 1}});
}

// Type 0: a1 (1, 2), a2 (2, 3); type 1: b1 (1, 1); B = 10.
inline HeteroInstance H2() {
  return HeteroInstance(Num(10), {{0, Num(1), Num(2), 0},
                                  {1, Num(2), Num(3), 0},
                                  {2, Num(1), Num(1), 1}});
}

}  // namespace bfm::testing

#endif  // BFM_TESTS_FIXTURES_H_
