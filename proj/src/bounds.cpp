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

#include "omegak/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "omegak/errors.hpp"
#include "omegak/exact.hpp"
#include "omegak/exp_core.hpp"

namespace omegak {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double factorial_d(int k) { return std::exp(log_factorial(k)); }

void require(bool inside, const std::string& bound, int n, int m, double xt) {
  if (!inside)
    throw RegionViolation(bound + ": point outside validity region (n=" + std::to_string(n) +
                          ", m=" + std::to_string(m) + ", x/t=" + std::to_string(xt) + ")");
}

void require_indices(int n, int m) {
  if (n < 0 || m < 0) throw DomainError("bounds need n, m >= 0");
  check_index({n, m});
}

double sqrt_n(int n) { return std::sqrt(static_cast<double>(n)); }

}  // namespace

bool small_argument_m_condition(int n, int m) {
  // floor(m log2(n+1) / 4) = floor(floor(log2((n+1)^m)) / 4)
  const BigInt power = pow_int(BigInt(n + 1), static_cast<unsigned>(m));
  const long floor_log2 = static_cast<long>(boost::multiprecision::msb(power));
  const long f = floor_log2 / 4;
  return 4 * f - 4 <= n - 1;
}

bool small_argument_m_range(int n, int m, int C) {
  if (C <= 1) throw DomainError("small-argument bound needs C > 1");
  const long long lhs = static_cast<long long>(m) * m * C * C;
  const long long rhs = static_cast<long long>(n) * (C - 1) * (C - 1);
  return lhs <= rhs;
}

bool region_omega_small(int n, int m, double x, double gamma, int C) {
  if (n < 0 || m < 0 || !(x > 0.0)) return false;
  if (!small_argument_m_range(n, m, C) || !small_argument_m_condition(n, m)) return false;
  return x <= n / (2.0 * C) && x <= (n + 1) / (4.0 * gamma);
}

double omega_large_threshold(int n, int m) {
  return n <= 1 ? 0.0 : n + m * (sqrt_n(n) + 2.0);
}

bool region_omega_large(int n, int m, double x) {
  if (n < 0 || m < 0) return false;
  if (m < 1.0 + 2.0 * std::log(n + 1.0)) return false;
  return x > omega_large_threshold(n, m);
}

bool region_omega_expdecay(int n, double x) {
  return n >= 0 && x >= std::max(1.0, n + sqrt_n(n));
}

bool region_g_small(int n, int m, double t) {
  return n >= 0 && m >= 0 && t >= 0.0 && t <= n - m * sqrt_n(n);
}

double g_large_threshold(int n, int m) { return n <= 1 ? 0.0 : n + m * (sqrt_n(n) + 2.0); }

bool region_g_large(int n, int m, double t) {
  if (n < 0 || m < 0 || t < 0.0) return false;
  if (m < 2.0 * std::log(n + 1.0)) return false;
  return t >= g_large_threshold(n, m);
}

bool region_g_expdecay(int n, double t) { return n >= 0 && t >= n + sqrt_n(n); }

double rhs_omega_general(int n, int m, double x, double gamma) {
  require_indices(n, m);
  if (!(x > 0.0)) throw DomainError("rhs_omega_general needs x > 0");
  if (gamma < 1.0) throw DomainError("gamma must be >= 1");
  const double root = std::sqrt(n + 1.0);
  double inner = gamma / root;
  if (n + m == 0) inner *= 1.0 + std::log((x + 1.0) / x);
  if (m == 0) inner += 1.0 / std::sqrt(2.0 * x + 1.0);
  return factorial_d(m) * std::pow(gamma * root / x, m) * inner;
}

double rhs_omega_small(int n, int m, double x, double gamma, int C) {
  require_indices(n, m);
  require(region_omega_small(n, m, x, gamma, C), "rhs_omega_small", n, m, x);
  const double root = std::sqrt(n + 1.0);
  double inner = gamma / root;
  if (n + m == 0) inner *= 1.0 + std::log((x + 1.0) / x);
  if (m == 0) inner += 1.0 / std::sqrt(2.0 * x + 1.0);
  return factorial_d(m) * std::pow(gamma / x, m) * inner;
}

double rhs_omega_large(int n, int m, double x, double gamma) {
  require_indices(n, m);
  require(region_omega_large(n, m, x), "rhs_omega_large", n, m, x);
  return factorial_d(m) * std::pow(gamma / x, m);
}

double rhs_omega_expdecay(int n, double x) {
  require_indices(n, 0);
  require(region_omega_expdecay(n, x), "rhs_omega_expdecay", n, 0, x);
  const double r = sqrt_n(n);
  return 3.0 * std::exp(r - x / (1.0 + r)) / std::sqrt(n + 1.0);
}

double g_general_constant(int m) {
  return std::pow(4.0 * std::exp(1.0), m + 3) * factorial_d(m + 2);
}

double rhs_g_general(int n, int m, int ell) {
  require_indices(n, m);
  if (ell != 0 && ell != 1) throw DomainError("ell must be 0 or 1");
  return g_general_constant(m) * std::pow(n + 1.0, (m - 1) / 2.0 + ell);
}

double rhs_g_small(int n, int m, double t) {
  require_indices(n, m);
  require(region_g_small(n, m, t), "rhs_g_small", n, m, t);
  const double ratio = m == 0 ? 1.0 : std::pow(n / (n - t), m);
  return std::pow(2.0, m + 1) * factorial_d(m + 2) / std::sqrt(n + 1.0) * ratio;
}

double rhs_g_large(int n, int m, int ell, double t, double c) {
  require_indices(n, m);
  if (ell != 0 && ell != 1) throw DomainError("ell must be 0 or 1");
  if (!(c > 0.0 && c < 1.0)) throw DomainError("c must lie in (0, 1)");
  require(region_g_large(n, m, t), "rhs_g_large", n, m, t);
  return 4.0 * std::pow(3.0 / std::log(1.0 / c), m) * factorial_d(m + 2) * std::pow(n + 1.0, ell);
}

ExpDecayVariants rhs_g_expdecay(int n, double t) {
  require_indices(n, 0);
  require(region_g_expdecay(n, t), "rhs_g_expdecay", n, 0, t);
  const double r = sqrt_n(n);
  const double root = std::sqrt(n + 1.0);
  ExpDecayVariants v;
  v.asymptotic = std::exp(r - t / (1.0 + r)) / root;
  if (n >= 1) v.sharp = std::exp(r * (1.0 - t / (n + r))) / root;
  return v;
}

bool region_g_band(BandVariant v, int n, int m, double t) {
  if (n < 2 || m < 0 || t < 0.0) return false;
  const double r = sqrt_n(n);
  switch (v) {
    case BandVariant::kBelowPeak:
      return t <= n - r;
    case BandVariant::kBelowPeakRefined:
      return t <= n - m * r;
    case BandVariant::kGaussian:
      return m == 0 && t <= n - r;
    case BandVariant::kAbovePeak:
      return t >= n + r;
    case BandVariant::kAbovePeakLarge:
      return m >= 2.0 * std::log(static_cast<double>(n)) && t >= n + m * (r + 2.0);
    case BandVariant::kSharpDecay:
      return m == 0 && t >= n + r;
  }
  return false;
}

double rhs_g_band(BandVariant v, int n, int m, double t, int ell, double c) {
  require_indices(n, m);
  if (ell != 0 && ell != 1) throw DomainError("ell must be 0 or 1");
  require(region_g_band(v, n, m, t), "rhs_g_band", n, m, t);
  const double r = sqrt_n(n);
  switch (v) {
    case BandVariant::kBelowPeak:
      return std::exp(static_cast<double>(m)) * factorial_d(m + 2) * std::pow(n, (m - 1) / 2.0);
    case BandVariant::kBelowPeakRefined: {
      const double ratio = m == 0 ? 1.0 : std::pow(n / (n - t), m);
      return std::pow(2.0, m + 1) * factorial_d(m + 2) / std::sqrt(n + 1.0) * ratio;
    }
    case BandVariant::kGaussian: {
      const double delta = n - t;
      return std::exp(-delta * delta / (2.0 * n)) / std::sqrt(n + 1.0);
    }
    case BandVariant::kAbovePeak:
      return g_general_constant(m) * std::pow(n, (m - 1) / 2.0 + ell);
    case BandVariant::kAbovePeakLarge:
      return std::pow(3.0 / std::log(1.0 / c), m) * factorial_d(m + 2) * std::pow(4.0 * n, ell);
    case BandVariant::kSharpDecay:
      return std::exp(r * (1.0 - t / (n + r))) / std::sqrt(n + 1.0);
  }
  return 0.0;
}

double rhs_rounding_error(double rhs) {
  if (rhs == 0.0 || !std::isfinite(rhs)) return 0.0;
  return kEps * (16.0 + 2.0 * std::abs(std::log(std::abs(rhs)))) * std::abs(rhs);
}

}  // namespace omegak
