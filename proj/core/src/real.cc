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

#include "bfm/real.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "bfm/errors.h"

namespace bfm {

Interval::Interval(mpfr_prec_t precision) : owns_(true) {
  mpfr_init2(lo_, precision);
  mpfr_init2(hi_, precision);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : owns_(true) {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.precision()) {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(Interval other) noexcept {
  swap(*this, other);
  return *this;
}

Interval::~Interval() {
  if (owns_) {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }
}

void swap(Interval& a, Interval& b) noexcept {
  mpfr_swap(a.lo_, b.lo_);
  mpfr_swap(a.hi_, b.hi_);
}

Interval Interval::FromNum(const Num& x, mpfr_prec_t precision) {
  Interval out(precision);
  mpfr_set_q(out.lo_, x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, x.get_mpq_t(), MPFR_RNDU);
  return out;
}

double Interval::Width() const {
  mpfr_t w;
  mpfr_init2(w, precision());
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  const double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

Interval Interval::Sqrt() const {
  if (mpfr_sgn(lo_) < 0) throw ContractViolation("sqrt of an interval below 0");
  Interval out(precision());
  mpfr_sqrt(out.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(out.hi_, hi_, MPFR_RNDU);
  return out;
}

Interval Interval::Exp() const {
  Interval out(precision());
  mpfr_exp(out.lo_, lo_, MPFR_RNDD);
  mpfr_exp(out.hi_, hi_, MPFR_RNDU);
  return out;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval out(std::max(a.precision(), b.precision()));
  mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval out(std::max(a.precision(), b.precision()));
  mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return out;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  Interval out(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_srcptr as[2] = {a.lo_, a.hi_};
  mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (mpfr_srcptr x : as) {
    for (mpfr_srcptr y : bs) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, out.lo_)) mpfr_set(out.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, out.hi_)) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return out;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) {
    throw ContractViolation("interval division by an interval containing 0");
  }
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  Interval inv(prec);
  mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
  return a * inv;
}

Real::Real(const Num& x)
    : evaluate_([x](mpfr_prec_t p) { return Interval::FromNum(x, p); }),
      exact_(x),
      description_(ToString(x)) {}

Real::Real(Evaluator evaluator, std::string description)
    : evaluate_(std::move(evaluator)), description_(std::move(description)) {}

Real Real::E() {
  return Real([](mpfr_prec_t p) { return Interval::FromNum(Num(1), p).Exp(); },
              "e");
}

Real Real::Sqrt2() { return Real(Num(2)).Sqrt(); }

Real Real::Sqrt() const {
  auto f = evaluate_;
  return Real([f](mpfr_prec_t p) { return f(p).Sqrt(); },
              "sqrt(" + description_ + ")");
}

std::string Real::Approximate(int digits) const {
  if (exact_) return ToDecimal(*exact_, digits);
  const Interval iv = Enclose(kBasePrecisionBits + 4 * digits);
  Num mid;
  mpfr_get_q(mid.get_mpq_t(), iv.lo());
  return ToDecimal(mid, digits);
}

namespace {

template <typename Op>
Real Combine(const Real& a, const Real& b, Op op, const char* symbol) {
  if (a.exact() && b.exact()) return Real(op(*a.exact(), *b.exact()));
  return Real(
      [a, b, op](mpfr_prec_t p) { return op(a.Enclose(p), b.Enclose(p)); },
      "(" + a.description() + symbol + b.description() + ")");
}

// Decides a against the enclosure, or returns nullopt if undecided.
std::optional<std::strong_ordering> Decide(const Num& a, const Interval& iv) {
  if (mpfr_cmp_q(iv.lo(), a.get_mpq_t()) > 0) return std::strong_ordering::less;
  if (mpfr_cmp_q(iv.hi(), a.get_mpq_t()) < 0) {
    return std::strong_ordering::greater;
  }
  // A degenerate enclosure pins the real exactly (e.g. 0 * e).
  if (mpfr_equal_p(iv.lo(), iv.hi()) && mpfr_cmp_q(iv.lo(), a.get_mpq_t()) == 0) {
    return std::strong_ordering::equal;
  }
  return std::nullopt;
}

}  // namespace

Real operator+(const Real& a, const Real& b) {
  return Combine(a, b, [](const auto& x, const auto& y) { return x + y; }, "+");
}
Real operator-(const Real& a, const Real& b) {
  return Combine(a, b, [](const auto& x, const auto& y) { return x - y; }, "-");
}
Real operator*(const Real& a, const Real& b) {
  return Combine(a, b, [](const auto& x, const auto& y) { return x * y; }, "*");
}
Real operator/(const Real& a, const Real& b) {
  return Combine(a, b, [](const auto& x, const auto& y) { return x / y; }, "/");
}

std::strong_ordering Compare(const Num& a, const Real& x) {
  if (x.exact()) return ThreeWay(a, *x.exact());
  for (mpfr_prec_t p = kBasePrecisionBits; p <= kMaxPrecisionBits; p *= 2) {
    if (auto d = Decide(a, x.Enclose(p))) return *d;
  }
  throw LimitError("cannot separate " + ToString(a) + " from " +
                   x.description() + " at the maximum precision");
}

std::strong_ordering RealComparator::Compare(const Num& a) {
  if (x_.exact()) return ThreeWay(a, *x_.exact());
  for (mpfr_prec_t p = kBasePrecisionBits; p <= kMaxPrecisionBits; p *= 2) {
    auto it = cache_.find(p);
    if (it == cache_.end()) it = cache_.emplace(p, x_.Enclose(p)).first;
    if (auto d = Decide(a, it->second)) return *d;
  }
  throw LimitError("cannot separate " + ToString(a) + " from " +
                   x_.description() + " at the maximum precision");
}

}  // namespace bfm
