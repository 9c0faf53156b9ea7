// Copyright 2026 The omegak Authors
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

#include <gtest/gtest.h>

#include <cmath>

#include "omegak/exact.hpp"

using namespace omegak;

TEST(Exact, FactorialAndBinomial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(20), BigInt("2432902008176640000"));
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
  EXPECT_EQ(falling_factorial(7, 3), 210);
  EXPECT_EQ(falling_factorial(7, 0), 1);
}

TEST(Exact, DoubleFactorialConventions) {
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(0), 1);
  EXPECT_EQ(double_factorial(1), 1);
  EXPECT_EQ(double_factorial(7), 105);
  EXPECT_EQ(double_factorial(8), 384);
}

TEST(Exact, LogOfHugeIntegers) {
  // ln(400!) = lgamma(401)
  EXPECT_NEAR(log_big(factorial(400)), std::lgamma(401.0), 1e-10);
  EXPECT_NEAR(log_abs(Rational(BigInt(-3), BigInt(7))), std::log(3.0 / 7.0), 1e-15);
}

TEST(Exact, RationalConversion) {
  EXPECT_DOUBLE_EQ(to_double(Rational(1, 3)), 1.0 / 3.0);
  const Rational big(factorial(300), factorial(299));
  EXPECT_DOUBLE_EQ(to_double(big), 300.0);
  EXPECT_EQ(pow_int(BigInt(3), 40), BigInt("12157665459056928801"));
}
