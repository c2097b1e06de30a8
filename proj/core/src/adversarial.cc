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

#include "bfm/adversarial.h"

#include <utility>

#include "bfm/brute_force.h"
#include "bfm/errors.h"

namespace bfm {

QuadraticSurd::QuadraticSurd(Num a, Num b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

int QuadraticSurd::Sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  // Opposite signs: compare a^2 with 2 b^2.
  const int c = cmp(a_ * a_, 2 * b_ * b_);
  return c > 0 ? sa : sb;
}

Real QuadraticSurd::ToReal() const {
  return Real(a_) + Real(b_) * Real::Sqrt2();
}

std::string QuadraticSurd::ToString() const {
  return bfm::ToString(a_) + " + " + bfm::ToString(b_) + "*sqrt2";
}

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
  return {x.a_ + y.a_, x.b_ + y.b_};
}

QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) {
  return {x.a_ - y.a_, x.b_ - y.b_};
}

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
  return {x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
}

QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y) {
  const Num norm = y.a_ * y.a_ - 2 * y.b_ * y.b_;
  if (norm == 0) throw ContractViolation("division by zero surd");
  const QuadraticSurd conj(y.a_, -y.b_);
  const QuadraticSurd top = x * conj;
  return {top.a_ / norm, top.b_ / norm};
}

std::strong_ordering operator<=>(const QuadraticSurd& x, const QuadraticSurd& y) {
  const int s = (x - y).Sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
  return x.a_ == y.a_ && x.b_ == y.b_;
}

const Num& Sqrt2Shadow() {
  static const Num shadow = [] {
    // Convergents p/q of sqrt2; the error is below 1/(2 q^2).
    mpz_class p = 1;
    mpz_class q = 1;
    const mpz_class target("100000000000000000000000");  // 1e23
    while (q < target) {
      mpz_class np = p + 2 * q;
      q = p + q;
      p = np;
    }
    Num r(p, q);
    r.canonicalize();
    return r;
  }();
  return shadow;
}

Instance Lb3Instance(const Num& c1, const Num& c2, const Num& c3) {
  return Instance(Num(1), {{0, c1}, {1, c2}, {2, c3}},
                  Valuation::Additive({Sqrt2Shadow(), Num(1), Num(1)}));
}

namespace {

std::vector<Num> InteriorGrid(const Num& lo, const Num& hi, int resolution) {
  std::vector<Num> out;
  for (int j = 1; j <= resolution; ++j) {
    Num x = lo + (hi - lo) * j / (resolution + 1);
    x.canonicalize();
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Num> ItemOneGrid(int resolution) {
  std::vector<Num> out;
  for (int j = 0; j <= resolution; ++j) {
    Num x = Num(11, 10) * j / resolution;
    x.canonicalize();
    out.push_back(std::move(x));
  }
  return out;
}

QuadraticSurd SymbolicValue(const AgentSet& set) {
  QuadraticSurd v;
  for (AgentId i : set) {
    v = v + (i == 0 ? QuadraticSurd::Sqrt2() : QuadraticSurd(Num(1), Num(0)));
  }
  return v;
}

const Num kSeven = Num(7) / 10;
const Num kLow = Num(1) / 5;
const Num kHigh = Num(3) / 10;

}  // namespace

std::vector<Lb3Point> Lb3Family(int resolution,
                                std::optional<std::pair<Num, Num>> region2) {
  if (resolution < 16) throw InputError("lb3 grid resolution must be >= 16");
  const auto [lo2, hi2] = region2.value_or(std::make_pair(kLow, kHigh));
  std::vector<Lb3Point> out;
  const std::vector<Num> ones = ItemOneGrid(resolution);
  for (const Num& c2 : InteriorGrid(kLow, kHigh, resolution)) {
    for (const Num& c1 : ones) out.push_back({1, c1, c2, kSeven});
  }
  for (const Num& c3 : InteriorGrid(lo2, hi2, resolution)) {
    for (const Num& c1 : ones) out.push_back({2, c1, kSeven, c3});
  }
  const Num corner = Num(1) / 100;
  out.push_back({3, corner, corner, corner});
  return out;
}

Lb3Report ProbeLb3(const RuleFactory& mechanism, int resolution) {
  Lb3Report report;
  // p_1 does not depend on item 1's own bid.
  auto p1 = [&](const Num& c2, const Num& c3) {
    const Instance inst = Lb3Instance(Num(0), c2, c3);
    return ThresholdPayment(mechanism(inst), BidProfile::Truthful(inst), 0,
                            inst.budget())
        .Payment();
  };

  std::optional<std::pair<Num, Num>> region2;
  for (const Num& c2 : InteriorGrid(kLow, kHigh, resolution)) {
    ++report.lemma_points_region1;
    const Num p = p1(c2, kSeven);
    if (p < 1 - c2) {
      ++report.lemma_hits_region1;
      if (!region2) {
        const Num x = 1 - c2 - p;
        region2 = std::make_pair(c2, Min(kHigh, c2 + x));
      }
    }
  }
  report.region2_interval = region2.value_or(std::make_pair(kLow, kHigh));
  for (const Num& c3 :
       InteriorGrid(report.region2_interval.first,
                    report.region2_interval.second, resolution)) {
    ++report.lemma_points_region2;
    if (p1(kSeven, c3) < 1 - c3) ++report.lemma_hits_region2;
  }

  bool have_max = false;
  for (const Lb3Point& pt : Lb3Family(resolution, report.region2_interval)) {
    ++report.points;
    const Instance inst = Lb3Instance(pt.c1, pt.c2, pt.c3);
    const BidProfile bids = BidProfile::Truthful(inst);
    const QuadraticSurd value = SymbolicValue(mechanism(inst)(bids));
    const QuadraticSurd opt = SymbolicValue(BruteForceOpt(inst, bids).set);
    if (opt.Sign() == 0) continue;
    if (value.Sign() == 0) {
      report.infinite = true;
      continue;
    }
    const QuadraticSurd ratio = opt / value;
    if (!have_max || ratio > report.max_ratio) {
      have_max = true;
      report.max_ratio = ratio;
      report.argmax = pt;
    }
  }
  return report;
}

WeightedInstanceFamily YaoDistribution(int n, const Num& eps, const Num& budget) {
  if (n < 3) throw InputError("yao distribution needs n >= 3");
  if (eps <= 0 || eps >= 1) throw InputError("yao distribution needs 0 < eps < 1");
  WeightedInstanceFamily family;
  family.description = "yao n=" + std::to_string(n) + " eps=" + ToString(eps) +
                       " B=" + ToString(budget);
  const Valuation unit = Valuation::Additive({Num(1), Num(1)});
  auto add = [&](int i, int j, const Num& prob) {
    Num c1 = budget * i / n;
    Num c2 = budget * j / n;
    c1.canonicalize();
    c2.canonicalize();
    Num p = prob;
    p.canonicalize();
    family.members.push_back({p, Instance(budget, {{0, c1}, {1, c2}}, unit)});
  };
  const Num type1 = (1 - eps) / (n - 1);
  for (int k = 1; k <= n - 1; ++k) add(k, n - k, type1);
  const Num type2 = 2 * eps / ((n - 1) * (n - 2));
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n - 1; ++j) {
      if (i + j > n) add(i, j, type2);
    }
  }
  return family;
}

ExpectedRatio ExpectedRatioUnderDistribution(const RuleFactory& mechanism,
                                             const WeightedInstanceFamily& family) {
  ExpectedRatio out;
  for (const WeightedInstance& member : family.members) {
    const Instance& inst = member.instance;
    const BidProfile bids = BidProfile::Truthful(inst);
    const Num value = inst.valuation().Evaluate(mechanism(inst)(bids));
    const Num opt = BruteForceOpt(inst, bids).value;
    if (opt == 0) {
      out.value += member.probability;
    } else if (value == 0) {
      out.infinite = true;
    } else {
      out.value += member.probability * opt / value;
    }
  }
  out.value.canonicalize();
  return out;
}

Num YaoLowerBound(int n, const Num& eps) {
  Num r = 2 - eps - (1 - eps) / (n - 1);
  r.canonicalize();
  return r;
}

}  // namespace bfm
