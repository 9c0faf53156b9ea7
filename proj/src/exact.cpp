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

#include "omegak/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace omegak {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

BigInt falling_factorial(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("falling_factorial: need 0 <= k <= n");
  BigInt r = 1;
  for (int j = 0; j < k; ++j) r *= (n - j);
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int j = 1; j <= k; ++j) {
    r *= (n - k + j);
    r /= j;
  }
  return r;
}

BigInt double_factorial(int n) {
  if (n < -1) throw std::invalid_argument("double_factorial: n < -1");
  BigInt r = 1;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

BigInt pow_int(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

double log_big(const BigInt& value) {
  if (value <= 0) throw std::invalid_argument("log_big: nonpositive argument");
  const unsigned bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 1000) return std::log(value.convert_to<double>());
  const unsigned shift = bits - 64;
  const BigInt top = value >> shift;
  return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

double log_abs(const Rational& q) {
  const BigInt num = boost::multiprecision::abs(boost::multiprecision::numerator(q));
  const BigInt den = boost::multiprecision::denominator(q);
  return log_big(num) - log_big(den);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

long double to_long_double(const Rational& q) { return q.convert_to<long double>(); }

}  // namespace omegak
