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

#include "bfm/errors.h"
#include "gtest/gtest.h"

namespace bfm {
namespace {

TEST(ParseNum, Integers) {
  EXPECT_EQ(ParseNum("12"), Num(12));
  EXPECT_EQ(ParseNum("-3"), Num(-3));
  EXPECT_EQ(ParseNum("+4"), Num(4));
}

TEST(ParseNum, FractionsAreReduced) {
  const Num x = ParseNum("14/20");
  EXPECT_EQ(x.get_num(), 7);
  EXPECT_EQ(x.get_den(), 10);
}

TEST(ParseNum, DecimalsAreExact) {
  EXPECT_EQ(ParseNum("0.7"), Num(7) / 10);
  EXPECT_EQ(ParseNum("2.50"), Num(5) / 2);
  EXPECT_EQ(ParseNum("-0.125"), Num(-1) / 8);
}

TEST(ParseNum, RejectsGarbage) {
  for (const char* bad : {"", "abc", "1/0", ".", ".5.", "3/-", "1e5", "0x10"}) {
    EXPECT_THROW(ParseNum(bad), InputError) << bad;
  }
}

TEST(ToString, IntegerOrFraction) {
  EXPECT_EQ(ToString(Num(60) / 11), "60/11");
  EXPECT_EQ(ToString(Num(10)), "10");
  EXPECT_EQ(ToString(Num(-1) / 3), "-1/3");
}

TEST(ToDecimal, TrimsAndRounds) {
  EXPECT_EQ(ToDecimal(Num(5) / 2), "2.5");
  EXPECT_EQ(ToDecimal(Num(15) / 6), "2.5");
  EXPECT_EQ(ToDecimal(Num(3)), "3");
  EXPECT_EQ(ToDecimal(Num(2) / 3, 4), "0.6667");
  EXPECT_EQ(ToDecimal(Num(-2) / 3, 4), "-0.6667");
  EXPECT_EQ(ToDecimal(Num(1) / 3, 30), "0.333333333333333333333333333333");
}

TEST(SimplestRationalBetween, PicksSmallestDenominator) {
  EXPECT_EQ(SimplestRationalBetween(Num(54) / 11 - Num(1) / 1000,
                                    Num(54) / 11 + Num(1) / 1000),
            Num(54) / 11);
  EXPECT_EQ(SimplestRationalBetween(Num(3) / 10, Num(4) / 10), Num(1) / 3);
  EXPECT_EQ(SimplestRationalBetween(Num(1) / 2, Num(3) / 2), Num(1));
  EXPECT_EQ(SimplestRationalBetween(Num(-3) / 2, Num(-1) / 2), Num(-1));
  EXPECT_EQ(SimplestRationalBetween(Num(7) / 3, Num(7) / 3), Num(7) / 3);
}

TEST(ScaleByPow2, Exact) {
  EXPECT_EQ(ScaleByPow2(Num(10), 1), Num(5));
  EXPECT_EQ(ScaleByPow2(Num(1), 60) * 1024, ScaleByPow2(Num(1), 50));
}

}  // namespace
}  // namespace bfm
