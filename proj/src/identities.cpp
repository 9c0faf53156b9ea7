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

#include "omegak/identities.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <mutex>

#include "omegak/errors.hpp"
#include "omegak/exp_core.hpp"
#include "omegak/parallel.hpp"
#include "omegak/quadrature.hpp"

namespace omegak {
namespace {

using Big = boost::multiprecision::cpp_bin_float_100;
using Mid = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<30>, boost::multiprecision::et_off>;

constexpr int kMaxMu = 64;
constexpr int kMaxDoubleFactorialM = 400;

void check_mu(int mu) {
  if (mu < 1 || mu > kMaxMu) throw DomainError("mu must lie in [1, 64]");
}

// Tail bound for the integral over [T, inf) of t^p |g_n^(m)(t)|, T >= 2(n + p + 1):
//   sum_j C(m,j) ((n-j+p)!/(n-j)!) * 2 g_{n-j+p}(T).
long double identity_tail(int n, int m, int p, long double T) {
  long double total = 0;
  for (int j = 0; j <= std::min(m, n); ++j) {
    const int k = n - j + p;
    const long double log_term = std::lgamma(static_cast<long double>(m + 1)) -
                                 std::lgamma(static_cast<long double>(j + 1)) -
                                 std::lgamma(static_cast<long double>(m - j + 1)) - log_factorial_ld(n - j) +
                                 k * std::log(T) - T;
    total += 2.0L * std::exp(log_term);
  }
  return total;
}

}  // namespace

TaylorKernel taylor_kernel(int mu) {
  check_mu(mu);
  TaylorKernel k;
  k.mu = mu;
  for (int l = 0; l < mu; ++l) {
    k.coefficients.push_back(Rational(binomial(2 * l, l), pow_int(BigInt(4), static_cast<unsigned>(l))));
  }
  k.c_mu = Rational(BigInt(mu) * binomial(2 * mu, mu) * 2, pow_int(BigInt(4), static_cast<unsigned>(mu)));
  return k;
}

double tmu_eval(int mu, double z) {
  check_mu(mu);
  if (!(z >= 0.0 && z < 1.0)) throw DomainError("T_mu needs 0 <= z < 1");
  static std::once_flag once;
  static std::vector<std::vector<double>> table;
  std::call_once(once, [] {
    table.resize(kMaxMu + 1);
    for (int m = 1; m <= kMaxMu; ++m) {
      for (const auto& c : taylor_kernel(m).coefficients) table[m].push_back(to_double(c));
    }
  });
  const auto& c = table[mu];
  const double z2 = z * z;
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z2 + *it;
  return acc;
}

TaylorRemainderCheck taylor_remainder_check(int mu, double t, double x) {
  check_mu(mu);
  if (!(x >= 0.0) || !(x < t) || !std::isfinite(t)) throw DomainError("remainder check needs 0 <= x < t");
  const TaylorKernel k = taylor_kernel(mu);
  const Big tb = t, xb = x;
  const Big z = xb / tb;
  const Big z2 = z * z;
  Big tz = 0;
  for (auto it = k.coefficients.rbegin(); it != k.coefficients.rend(); ++it) {
    tz = tz * z2 + Big(numerator(*it)) / Big(denominator(*it));
  }
  const Big root = sqrt(tb * tb - xb * xb);
  const Big lhs = abs(Big(1) / root - tz / tb);
  const Big rhs = pow(z2, mu) / root;
  TaylorRemainderCheck out;
  out.lhs = static_cast<double>(lhs);
  out.rhs = static_cast<double>(rhs);
  out.pass = lhs <= rhs * Big(1.0 + 1e-12);
  return out;
}

IdentityResidual integral_identity(int n, int m, int r, double x, const QuadratureConfig& cfg) {
  cfg.validate();
  if (r < 0 || 2 * r > n - 1) throw DomainError("identity needs 0 <= 2r <= n-1");
  if (m < 1 + 2 * r) throw DomainError("identity needs m >= 1 + 2r");
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("x must be positive");
  check_index({n, m});
  const int p = m - 1 - 2 * r;

  // The left side cancels badly when m > n and x is small (the integral is
  // O(x^m) while the integrand is not), so both sides use 30 digits.
  long double T = std::max<long double>(2.0L * (n + p + 1), x + 1.0L);
  while (identity_tail(n, m, p, T) > 1e-18L) T += 4.0L + std::sqrt(T);
  const long double tail = identity_tail(n, m, p, T);

  // Left side: g_n^(m) = sum_j C(m,j) (-1)^{m-j} g_{n-j}, with t = x + v^2.
  std::vector<Mid> binom_row;
  for (int j = 0; j <= m; ++j) binom_row.push_back(Mid(binomial(m, j).str()));
  std::vector<Mid> inv_fact(n + 1);
  for (int k = 0; k <= n; ++k) inv_fact[k] = Mid(1) / Mid(factorial(k).str());
  const Mid xm = x;
  auto f = [&](const Mid& v) {
    const Mid t = xm + v * v;
    Mid gk = pow(t, n) * exp(-t) * inv_fact[n];
    Mid g = 0;
    for (int j = 0; j <= std::min(m, n); ++j) {
      if (j > 0) gk = gk * (n - j + 1) / t;
      const Mid term = binom_row[j] * gk;
      g += ((m - j) % 2 == 0) ? term : Mid(-term);
    }
    QuadSample<Mid> s;
    s.value = 2 * v * pow(t, p) * g;
    s.abs_err = abs(s.value) * Mid(1e-27);
    return s;
  };
  std::vector<Mid> breaks{Mid(0), sqrt(Mid(T) - xm)};
  if (n > x) breaks.push_back(sqrt(Mid(n) - xm));
  QuadOptions<Mid> opt;
  opt.abs_tol = Mid(1e-13);
  opt.rel_tol = Mid(1e-16);
  opt.scale_abs_by_l1 = false;
  opt.max_subdivisions = cfg.max_subdivisions;
  const auto q = integrate_adaptive<Mid>(f, breaks, opt);

  // Right side by the Leibniz rule:
  //   (d/dx)^{2r} (x^m h) = sum_j C(2r, j) m!/(m-j)! x^{m-j} h^{(2r-j)},
  // with h = g_{n-1-2r}^{(m-1-2r)} and h^{(i)}(x) = g_{n2}(x) s_{n2,k}(x) / x^k.
  const int n2 = n - 1 - 2 * r;
  const Mid g_n2 = pow(xm, n2) * exp(-xm) / Mid(factorial(n2).str());
  Mid acc = 0;
  for (int j = 0; j <= 2 * r && j <= m; ++j) {
    const int k = m - 1 - j;
    const SnmPolynomial s = snm_polynomial({n2, k});
    Mid poly = 0;
    for (const auto& c : s.coefficients) poly = poly * xm + Mid(numerator(c).str()) / Mid(denominator(c).str());
    // coefficients run from t^k downward; pad the trailing powers.
    poly *= pow(xm, k - static_cast<int>(s.coefficients.size()) + 1);
    const Mid coef = Mid((binomial(2 * r, j) * falling_factorial(m, j)).str());
    acc += coef * pow(xm, m - j) * g_n2 * poly / pow(xm, k);
  }
  const Mid rhs = -acc * Mid(factorial(n2).str()) / Mid(factorial(n).str());

  IdentityResidual out;
  out.lhs = static_cast<double>(q.value);
  out.lhs_err = static_cast<double>(q.abs_err) + static_cast<double>(tail);
  out.rhs = static_cast<double>(rhs);
  out.residual = static_cast<double>(abs(q.value - rhs));
  return out;
}

double integral_identity_residual(int n, int m, int r, double x, const QuadratureConfig& cfg) {
  return integral_identity(n, m, r, x, cfg).residual;
}

TaylorGridResult taylor_remainder_grid(int mu_max, int t_points, int z_points) {
  check_mu(mu_max);
  if (t_points < 2 || z_points < 2) throw DomainError("Taylor grid needs at least two points per axis");
  TaylorGridResult g;
  for (int mu = 1; mu <= mu_max; ++mu) {
    for (int i = 0; i < t_points; ++i) {
      const double t = std::exp(std::log(1.001) + (std::log(100.0) - std::log(1.001)) * i / (t_points - 1));
      for (int k = 0; k < z_points; ++k) {
        const double z =
            k == 0 ? 0.0 : std::exp(std::log(1e-3) + (std::log(0.999) - std::log(1e-3)) * (k - 1) / (z_points - 2));
        const double x = std::min(z * t, std::nextafter(t, 0.0));
        const TaylorRemainderCheck c = taylor_remainder_check(mu, t, x);
        ++g.checked;
        if (!c.pass) ++g.failed;
        if (c.rhs > 0.0 && c.lhs / c.rhs > g.worst_ratio) {
          g.worst_ratio = c.lhs / c.rhs;
          g.worst_mu = mu;
          g.worst_t = t;
          g.worst_x = x;
        }
      }
    }
  }
  return g;
}

IdentityGridResult integral_identity_grid(int max_n, int max_m, int max_r, const std::vector<double>& xs,
                                          double threshold, const QuadratureConfig& cfg, int threads) {
  if (max_n < 1 || max_m < 1 || max_r < 0 || xs.empty()) throw DomainError("identity grid ranges are empty");
  struct Case {
    int n, m, r;
    double x;
  };
  std::vector<Case> cases;
  for (int n = 1; n <= max_n; ++n)
    for (int m = 1; m <= max_m; ++m)
      for (int r = 0; r <= max_r && 2 * r <= n - 1 && m >= 1 + 2 * r; ++r)
        for (double x : xs) cases.push_back({n, m, r, x});
  std::vector<double> res(cases.size());
  parallel_for(
      cases.size(),
      [&](std::size_t i) {
        const Case& c = cases[i];
        try {
          res[i] = integral_identity_residual(c.n, c.m, c.r, c.x, cfg);
        } catch (const QuadratureFailure&) {
          res[i] = std::numeric_limits<double>::infinity();
        }
      },
      threads);
  IdentityGridResult g;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    ++g.checked;
    if (!(res[i] <= threshold)) ++g.failed;
    if (!(res[i] <= g.worst_residual)) {
      g.worst_residual = res[i];
      g.worst_n = cases[i].n;
      g.worst_m = cases[i].m;
      g.worst_r = cases[i].r;
      g.worst_x = cases[i].x;
    }
  }
  return g;
}

namespace {

struct DfTables {
  std::vector<BigInt> df;     // m!!
  std::vector<BigInt> fact;   // m!
  std::vector<double> log_df, log_fact;
};

const DfTables& df_tables() {
  static const DfTables t = [] {
    DfTables d;
    for (int m = 0; m <= kMaxDoubleFactorialM; ++m) {
      d.df.push_back(double_factorial(m));
      d.fact.push_back(factorial(m));
      d.log_df.push_back(log_big(d.df.back()));
      d.log_fact.push_back(log_big(d.fact.back()));
    }
    return d;
  }();
  return t;
}

}  // namespace

DoubleFactorialCheck double_factorial_check(int m, int k) {
  if (m < 0 || m > kMaxDoubleFactorialM || k < 0 || k > m)
    throw DomainError("double factorial check needs 0 <= k <= m <= 400");
  const DfTables& t = df_tables();
  const BigInt ff = t.fact[m] / t.fact[m - k];
  const BigInt mid_num2 = t.df[m] * t.df[m];
  const BigInt mid_den2 = t.df[m - k] * t.df[m - k];
  const unsigned ku = static_cast<unsigned>(k);
  // (3/5)^{2k} ff <= mid^2 <= 4^k ff, cleared of denominators.
  const bool lower_ok = pow_int(BigInt(9), ku) * ff * mid_den2 <= pow_int(BigInt(25), ku) * mid_num2;
  const bool upper_ok = mid_num2 <= pow_int(BigInt(4), ku) * ff * mid_den2;
  DoubleFactorialCheck out;
  const double half_log_ff = 0.5 * (t.log_fact[m] - t.log_fact[m - k]);
  out.log_lower = k * std::log(0.6) + half_log_ff;
  out.log_mid = t.log_df[m] - t.log_df[m - k];
  out.log_upper = k * std::log(2.0) + half_log_ff;
  out.pass = lower_ok && upper_ok;
  return out;
}

DoubleFactorialSweep double_factorial_sweep(int max_m) {
  if (max_m < 0 || max_m > kMaxDoubleFactorialM) throw DomainError("sweep needs 0 <= max_m <= 400");
  DoubleFactorialSweep s;
  for (int m = 0; m <= max_m; ++m) {
    for (int k = 0; k <= m; ++k) {
      ++s.checked;
      if (!double_factorial_check(m, k).pass) {
        if (s.failed++ == 0) {
          s.first_failed_m = m;
          s.first_failed_k = k;
        }
      }
    }
  }
  return s;
}

}  // namespace omegak
