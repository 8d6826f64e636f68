// Copyright 2026 The pslq Authors
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

#include "pslq/rational.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>

namespace pslq {
namespace {

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_EQ(Rational::parse("-3"), Rational(-3));
  EXPECT_EQ(Rational::parse("6/8"), Rational(3, 4));
  EXPECT_EQ(Rational::parse("-2/4").str(), "-1/2");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "1/-2", "a", "1/", "/2", "1.5", "1/2/3"}) {
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, CanonicalString) {
  EXPECT_EQ(Rational(10, 4).str(), "5/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational(0, 7).str(), "0");
  EXPECT_EQ(Rational(1, -3).str(), "-1/3");
}

TEST(Rational, Arithmetic) {
  const Rational a(1, 3);
  const Rational b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(-a, Rational(-1, 3));
  EXPECT_THROW(a / Rational(0), std::domain_error);
}

TEST(Rational, OrderingIsExact) {
  // 1/3 and its nearest double differ; the comparison must not.
  const Rational third(1, 3);
  EXPECT_LT(Rational(333333333333333, 1000000000000000), third);
  EXPECT_GT(Rational(333333333333334, 1000000000000000), third);
  EXPECT_EQ(third + third + third, Rational(1));
}

TEST(Rational, FloorAndCeil) {
  EXPECT_EQ(Rational(5, 3).floor(), Rational(1));
  EXPECT_EQ(Rational(5, 3).ceil(), Rational(2));
  EXPECT_EQ(Rational(-5, 3).floor(), Rational(-2));
  EXPECT_EQ(Rational(-5, 3).ceil(), Rational(-1));
  EXPECT_EQ(Rational(4).floor(), Rational(4));
  EXPECT_EQ(Rational(4).ceil(), Rational(4));
}

TEST(Rational, DecimalHasTwentySignificantDigits) {
  EXPECT_EQ(Rational(1, 3).decimal(), "0.33333333333333333333");
  EXPECT_EQ(Rational(2, 3).decimal(), "0.66666666666666666667");
  EXPECT_EQ(Rational(7, 8).decimal(), "0.875");
  EXPECT_EQ(Rational(0).decimal(), "0");
  EXPECT_EQ(Rational(-1, 4).decimal(), "-0.25");
  EXPECT_EQ(Rational(1, 30).decimal(), "0.033333333333333333333");
}

TEST(Rational, DenominatorDivides) {
  EXPECT_TRUE(Rational(7, 8).denominator_divides(24));
  EXPECT_FALSE(Rational(1, 5).denominator_divides(24));
  EXPECT_TRUE(Rational(3).denominator_divides(1));
}

TEST(Rational, PositivePart) {
  EXPECT_EQ(positive_part(Rational(-1, 2)), Rational(0));
  EXPECT_EQ(positive_part(Rational(1, 2)), Rational(1, 2));
}

TEST(Rational, StreamsCanonicalForm) {
  std::ostringstream os;
  os << Rational(9, 6);
  EXPECT_EQ(os.str(), "3/2");
}

TEST(Rational, HandlesValuesBeyondSixtyFourBits) {
  Rational x(1);
  for (int i = 0; i < 100; ++i) x *= Rational(3, 2);
  for (int i = 0; i < 100; ++i) x /= Rational(3, 2);
  EXPECT_EQ(x, Rational(1));
}

}  // namespace
}  // namespace pslq
