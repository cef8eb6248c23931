// Copyright 2026 The emocov Authors.
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

#include "emocov/rational.h"

#include "emocov/error.h"
#include "gtest/gtest.h"

namespace emocov {
namespace {

TEST(RationalTest, ParsesDecimalsExactly) {
  EXPECT_EQ(ParseRational("0.931"), Rational(931, 1000));
  EXPECT_EQ(ParseRational("0.5"), Rational(1, 2));
  EXPECT_EQ(ParseRational("2"), Rational(2));
  EXPECT_EQ(ParseRational("-0.25"), Rational(-1, 4));
  EXPECT_EQ(ParseRational("1e-3"), Rational(1, 1000));
  EXPECT_EQ(ParseRational("9.31E-1"), Rational(931, 1000));
  EXPECT_EQ(ParseRational("0.000"), Rational(0));
  EXPECT_EQ(ParseRational(".5"), Rational(1, 2));
}

TEST(RationalTest, ParsesFractions) {
  EXPECT_EQ(ParseRational("931/1000"), Rational(931, 1000));
  EXPECT_EQ(ParseRational("06/08"), Rational(3, 4));
  EXPECT_EQ(ParseRational("-1/3"), Rational(-1, 3));
}

TEST(RationalTest, RejectsGarbage) {
  for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "1e", "--1",
                          "0x10"}) {
    EXPECT_THROW(ParseRational(bad), Error) << bad;
  }
}

TEST(RationalTest, FromDoubleUsesShortestDecimal) {
  EXPECT_EQ(RationalFromDouble(0.931), Rational(931, 1000));
  EXPECT_EQ(RationalFromDouble(0.1), Rational(1, 10));
}

TEST(RationalTest, Formatting) {
  Rational third(1, 3);
  EXPECT_EQ(ToFractionString(third), "1/3");
  EXPECT_EQ(ToDecimalString(third, 4), "0.3333");
  EXPECT_EQ(ToDecimalString(Rational(2, 3), 4), "0.6667");
  EXPECT_EQ(ToDecimalString(Rational(1, 8), 2), "0.13");
  EXPECT_EQ(ToDecimalString(Rational(-1, 8), 2), "-0.13");
  EXPECT_EQ(ToDecimalString(Rational(-1, 1000), 2), "0.00");
  EXPECT_EQ(ToDecimalString(Rational(7), 0), "7");
  EXPECT_EQ(ToDecimalString(Rational(1, 20), 1), "0.1");
  EXPECT_DOUBLE_EQ(ToRoundedDouble(Rational(1, 36), 6), 0.027778);
}

}  // namespace
}  // namespace emocov
