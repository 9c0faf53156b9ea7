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

#include "omegak/bessel_k.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "omegak/errors.hpp"

namespace omegak {
namespace {

constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;
constexpr long double kEpsLd = std::numeric_limits<long double>::epsilon();

void check_args(int order, long double x) {
  if (order < 0) throw DomainError("K_nu oracle: negative order");
  if (order > kMaxBesselOrder) throw CapExceeded("K_nu oracle: order above 80");
  if (!(x > 0.0L) || !std::isfinite(static_cast<double>(x)))
    throw DomainError("K_nu oracle needs finite x > 0, got " + std::to_string(static_cast<double>(x)));
}

}  // namespace

long double bessel_k01_series(int order, long double x) {
  const long double y = x * x / 4;
  const long double lx = std::log(x / 2);
  if (order == 0) {
    long double term = 1, i0 = 1, rest = 0, harmonic = 0;
    for (int k = 1; k < 500; ++k) {
      term *= y / (static_cast<long double>(k) * k);
      harmonic += 1.0L / k;
      i0 += term;
      rest += harmonic * term;
      if (term * (1 + harmonic) < kEpsLd * (i0 + std::abs(rest)) * 1e-3L) break;
    }
    return -(lx + kEulerGamma) * i0 + rest;
  }
  // term_k = y^k / (k! (k+1)!)
  long double term = 1, i1 = 1, rest = 0;
  long double psi_k1 = -kEulerGamma;            // psi(k+1)
  long double psi_k2 = 1 - kEulerGamma;         // psi(k+2)
  rest = (psi_k1 + psi_k2) * term;
  for (int k = 1; k < 500; ++k) {
    term *= y / (static_cast<long double>(k) * (k + 1));
    psi_k1 += 1.0L / k;
    psi_k2 += 1.0L / (k + 1);
    i1 += term;
    rest += (psi_k1 + psi_k2) * term;
    if (term * (1 + psi_k2) < kEpsLd * (i1 + std::abs(rest)) * 1e-3L) break;
  }
  return 1 / x + lx * (x / 2) * i1 - (x / 4) * rest;
}

long double bessel_k01_cf(int order, long double x) {
  // Steed's method for the second continued fraction (Temme), nu = 0.
  long double b = 2 * (1 + x);
  long double d = 1 / b;
  long double h = d, delh = d;
  long double q1 = 0, q2 = 1;
  const long double a1 = 0.25L;
  long double q = a1, c = a1, a = -a1;
  long double s = 1 + q * delh;
  for (int i = 2; i < 100000; ++i) {
    a -= 2 * (i - 1);
    c = -a * c / i;
    const long double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2;
    d = 1 / (b + a * d);
    delh = (b * d - 1) * delh;
    h += delh;
    const long double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEpsLd / 4) break;
  }
  h = a1 * h;
  const long double k0 = std::sqrt(std::numbers::pi_v<long double> / (2 * x)) * std::exp(-x) / s;
  if (order == 0) return k0;
  return k0 * (x + 0.5L - h) / x;
}

std::vector<long double> bessel_k_sequence(int max_order, long double x) {
  check_args(0, x);
  if (max_order < 0) throw DomainError("K_nu sequence: negative order");
  std::vector<long double> k(max_order + 1);
  if (x <= 2) {
    k[0] = bessel_k01_series(0, x);
    if (max_order >= 1) k[1] = bessel_k01_series(1, x);
  } else {
    k[0] = bessel_k01_cf(0, x);
    if (max_order >= 1) k[1] = bessel_k01_cf(1, x);
  }
  for (int nu = 1; nu < max_order; ++nu) k[nu + 1] = k[nu - 1] + (2 * nu / x) * k[nu];
  return k;
}

long double bessel_k_ld(int order, long double x) {
  check_args(order, x);
  long double k0, k1;
  if (x <= 2) {
    k0 = bessel_k01_series(0, x);
    k1 = bessel_k01_series(1, x);
  } else {
    k0 = bessel_k01_cf(0, x);
    k1 = bessel_k01_cf(1, x);
  }
  if (order == 0) return k0;
  for (int nu = 1; nu < order; ++nu) {
    const long double k2 = k0 + (2 * nu / x) * k1;
    k0 = k1;
    k1 = k2;
  }
  return k1;
}

double bessel_k_oracle(int order, double x) {
  return static_cast<double>(bessel_k_ld(order, x));
}

}  // namespace omegak
