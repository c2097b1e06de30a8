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

#ifndef BFM_NUM_H_
#define BFM_NUM_H_

#include <compare>

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bfm {

// Exact rational used for every cost, bid, value, budget and payment.
// mpq_class keeps the canonical reduced form with a positive denominator.
using Num = mpq_class;

// Accepts "12", "-3", "7/10", "0.7", "2.50". Throws InputError otherwise.
Num ParseNum(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string ToString(const Num& x);

// Fixed-point rendering rounded half away from zero to `digits` fractional
// digits, with trailing zeros (and a dangling point) removed: 5/2 -> "2.5".
std::string ToDecimal(const Num& x, int digits = 30);

// Simplest rational (smallest denominator, then smallest magnitude) in the
// closed interval [lo, hi]. Requires lo <= hi.
Num SimplestRationalBetween(const Num& lo, const Num& hi);

// x * 2^-k, exact.
Num ScaleByPow2(const Num& x, int k);

inline Num Min(const Num& a, const Num& b) { return b < a ? b : a; }
inline Num Max(const Num& a, const Num& b) { return a < b ? b : a; }

// gmpxx predates operator<=>.
inline std::strong_ordering ThreeWay(const Num& a, const Num& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace bfm

#endif  // BFM_NUM_H_
