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

#ifndef BFM_ADVERSARIAL_H_
#define BFM_ADVERSARIAL_H_

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bfm/model.h"
#include "bfm/num.h"
#include "bfm/real.h"
#include "bfm/threshold.h"

namespace bfm {

// a + b sqrt(2) with rational a, b; exact arithmetic and ordering.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Num a, Num b = Num(0));  // NOLINT(runtime/explicit)

  static QuadraticSurd Sqrt2() { return {Num(0), Num(1)}; }

  const Num& a() const { return a_; }
  const Num& b() const { return b_; }
  int Sign() const;
  Real ToReal() const;
  std::string ToString() const;  // "a + b*sqrt2"

  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
  // Throws ContractViolation on division by zero.
  friend QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y);
  friend std::strong_ordering operator<=>(const QuadraticSurd& x,
                                          const QuadraticSurd& y);
  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y);

 private:
  Num a_;
  Num b_;
};

// Convergent p/q of sqrt(2) with |p/q - sqrt(2)| < 1e-40. Stands in for
// sqrt(2) inside instances; results are then re-evaluated symbolically.
const Num& Sqrt2Shadow();

// Three items, B = 1, values (sqrt2, 1, 1) with the shadow rational.
Instance Lb3Instance(const Num& c1, const Num& c2, const Num& c3);

struct Lb3Point {
  int region = 0;  // 1: c3 = 7/10; 2: c2 = 7/10; 3: small-cost corner
  Num c1;
  Num c2;
  Num c3;
};

// Region 1: c3 = 7/10, c2 on R interior points of (1/5, 3/10); region 2:
// c2 = 7/10, c3 on R interior points of the given interval (default
// (1/5, 3/10)); c1 = j (11/10) / R for j = 0..R in both, so some points
// drop item 1. Region 3 is the single point (1/100, 1/100, 1/100).
// Throws InputError if resolution < 16.
std::vector<Lb3Point> Lb3Family(int resolution,
                                std::optional<std::pair<Num, Num>> region2 = {});

struct Lb3Report {
  int points = 0;
  QuadraticSurd max_ratio;  // opt / value over points with positive value
  Lb3Point argmax;
  bool infinite = false;    // some point returned value 0 with opt > 0
  // p_1(c2, 7/10) < 1 - c2 over region 1 cost pairs, and
  // p_1(7/10, c3) < 1 - c3 over region 2 cost pairs.
  int lemma_points_region1 = 0;
  int lemma_hits_region1 = 0;
  int lemma_points_region2 = 0;
  int lemma_hits_region2 = 0;
  std::pair<Num, Num> region2_interval;
};

using RuleFactory = std::function<AllocationRule(const Instance&)>;

// Runs a deterministic mechanism over the family. Region 2's interval is
// (c, min(3/10, c + x)) for the first region 1 hit c with
// p_1(c, 7/10) = 1 - c - x, else (1/5, 3/10).
Lb3Report ProbeLb3(const RuleFactory& mechanism, int resolution);

struct WeightedInstance {
  Num probability;
  Instance instance;
};

struct WeightedInstanceFamily {
  std::string description;
  std::vector<WeightedInstance> members;
};

// Two unit-value items. Type 1: (kB/n, (n-k)B/n), k = 1..n-1, each with
// probability (1-eps)/(n-1). Type 2: (iB/n, jB/n), i, j in 1..n-1,
// i + j > n, each with probability 2 eps / ((n-1)(n-2)).
// Throws InputError unless n >= 3 and 0 < eps < 1.
WeightedInstanceFamily YaoDistribution(int n, const Num& eps, const Num& budget);

struct ExpectedRatio {
  bool infinite = false;
  Num value;
};

// Sum of probability * opt / value(mechanism(instance)) at truthful bids.
ExpectedRatio ExpectedRatioUnderDistribution(const RuleFactory& mechanism,
                                             const WeightedInstanceFamily& family);

// 2 - eps - (1 - eps)/(n - 1).
Num YaoLowerBound(int n, const Num& eps);

}  // namespace bfm

#endif  // BFM_ADVERSARIAL_H_
