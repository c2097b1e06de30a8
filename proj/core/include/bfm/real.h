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

#ifndef BFM_REAL_H_
#define BFM_REAL_H_

#include <mpfr.h>

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "bfm/num.h"

namespace bfm {

// Closed interval [lo, hi] with MPFR endpoints rounded outward. Every
// operation returns an enclosure of the exact result.
class Interval {
 public:
  explicit Interval(mpfr_prec_t precision);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(Interval other) noexcept;
  ~Interval();

  static Interval FromNum(const Num& x, mpfr_prec_t precision);

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

  // Upper bound on hi - lo as a double, for diagnostics.
  double Width() const;

  Interval Sqrt() const;
  Interval Exp() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  friend void swap(Interval& a, Interval& b) noexcept;

 private:
  mpfr_t lo_;
  mpfr_t hi_;
  bool owns_ = false;
};

// A real number given by a rule that encloses it at any requested precision.
// Built from rationals, e, sqrt and the four operations. When an expression
// only involves rationals the exact value is carried along.
class Real {
 public:
  using Evaluator = std::function<Interval(mpfr_prec_t)>;

  Real(const Num& x);  // NOLINT(runtime/explicit): rationals are reals.
  Real(Evaluator evaluator, std::string description);

  static Real E();
  static Real Sqrt2();

  Interval Enclose(mpfr_prec_t precision) const { return evaluate_(precision); }
  const std::optional<Num>& exact() const { return exact_; }
  const std::string& description() const { return description_; }

  // Decimal approximation for reports (not used for decisions).
  std::string Approximate(int digits = 30) const;

  Real Sqrt() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

 private:
  Evaluator evaluate_;
  std::optional<Num> exact_;
  std::string description_;
};

// Starting precision; 128 bits keeps interval widths below 1e-30 for the
// magnitudes that occur in this library.
inline constexpr mpfr_prec_t kBasePrecisionBits = 128;
inline constexpr mpfr_prec_t kMaxPrecisionBits = 1 << 16;

// Exact three-way comparison of a rational against a real. Precision doubles
// until the enclosure separates the two. Equality is only reported when the
// real is a known rational or its enclosure collapses to the point a.
// Throws LimitError if undecided at kMaxPrecisionBits.
std::strong_ordering Compare(const Num& a, const Real& x);

inline bool LessEq(const Num& a, const Real& x) { return Compare(a, x) <= 0; }
inline bool GreaterEq(const Num& a, const Real& x) { return Compare(a, x) >= 0; }

// Compares many rationals against one fixed real, reusing enclosures.
class RealComparator {
 public:
  explicit RealComparator(Real x) : x_(std::move(x)) {}
  std::strong_ordering Compare(const Num& a);
  const Real& real() const { return x_; }

 private:
  Real x_;
  std::map<mpfr_prec_t, Interval> cache_;
};

}  // namespace bfm

#endif  // BFM_REAL_H_
