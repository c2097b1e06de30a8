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

#include "bfm/num.h"

#include <cctype>
#include <string>

#include "bfm/errors.h"

namespace bfm {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class ParseInteger(std::string_view s) {
  mpz_class z;
  z.set_str(std::string(s), 10);
  return z;
}

Num Floor(const Num& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Num(q);
}

}  // namespace

Num ParseNum(std::string_view text) {
  const std::string original(text);
  auto fail = [&]() -> Num {
    throw InputError("malformed rational '" + original + "'");
  };
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Num result;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) return fail();
    const mpz_class d = ParseInteger(den);
    if (d == 0) throw InputError("zero denominator in '" + original + "'");
    result = Num(ParseInteger(num), d);
    result.canonicalize();
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !AllDigits(whole)) ||
        (!frac.empty() && !AllDigits(frac))) {
      return fail();
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const mpz_class w = whole.empty() ? mpz_class(0) : ParseInteger(whole);
    const mpz_class f = frac.empty() ? mpz_class(0) : ParseInteger(frac);
    result = Num(w * scale + f, scale);
    result.canonicalize();
  } else {
    if (!AllDigits(text)) return fail();
    result = Num(ParseInteger(text));
  }
  return negative ? Num(-result) : result;
}

std::string ToString(const Num& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string ToDecimal(const Num& x, int digits) {
  const bool negative = x < 0;
  const Num magnitude = negative ? Num(-x) : x;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const Num scaled = magnitude * Num(scale) + Num(1, 2);
  mpz_class units;
  mpz_fdiv_q(units.get_mpz_t(), scaled.get_num_mpz_t(),
             scaled.get_den_mpz_t());
  std::string s = units.get_str();
  if (static_cast<int>(s.size()) <= digits) {
    s.insert(0, digits + 1 - s.size(), '0');
  }
  std::string out = s.substr(0, s.size() - digits);
  std::string frac = s.substr(s.size() - digits);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (!frac.empty()) out += "." + frac;
  if (negative && out != "0") out.insert(0, "-");
  return out;
}

Num SimplestRationalBetween(const Num& lo, const Num& hi) {
  if (hi < lo) throw ContractViolation("SimplestRationalBetween: lo > hi");
  if (lo <= 0 && hi >= 0) return Num(0);
  if (hi < 0) return -SimplestRationalBetween(-hi, -lo);
  const Num fl = Floor(lo);
  if (fl == lo) return lo;
  if (fl + 1 <= hi) return fl + 1;
  // lo and hi share the integer part; recurse on the reciprocals of the
  // fractional parts (continued-fraction descent).
  const Num inner = SimplestRationalBetween(1 / (hi - fl), 1 / (lo - fl));
  return fl + 1 / inner;
}

Num ScaleByPow2(const Num& x, int k) {
  Num out;
  if (k >= 0) {
    mpq_div_2exp(out.get_mpq_t(), x.get_mpq_t(), k);
  } else {
    mpq_mul_2exp(out.get_mpq_t(), x.get_mpq_t(), -k);
  }
  return out;
}

}  // namespace bfm
