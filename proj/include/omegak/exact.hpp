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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace omegak {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
/// n! / (n - k)!  for 0 <= k <= n.
BigInt falling_factorial(int n, int k);
BigInt binomial(int n, int k);
/// n!! with the conventions 0!! = (-1)!! = 1.
BigInt double_factorial(int n);
BigInt pow_int(const BigInt& base, unsigned exponent);

/// Natural log of a positive big integer without overflowing a double.
double log_big(const BigInt& value);
/// Natural log of |q| for a nonzero rational.
double log_abs(const Rational& q);

double to_double(const Rational& q);
long double to_long_double(const Rational& q);

}  // namespace omegak
