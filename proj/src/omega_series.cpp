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

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <vector>

#include "omegak/bessel_eval.hpp"
#include "omegak/errors.hpp"

namespace omegak {
namespace {

using Mp = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<400, boost::multiprecision::digit_base_2>,
                                         boost::multiprecision::et_off>;

constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

// K_0(x) = sum_k x^{2k} (h_k - ln x) / (4^k k!^2),  h_k = H_k - euler + ln 2.
// Multiplying by (-x)^n / n! after n differentiations gives
//   omega~_n(x) = sum_k x^{2k} (alpha_k + beta_k ln x)
// with, for 2k < n,  alpha_k = a_k (2k)! (n-2k-1)! / n!,  beta_k = 0,
// and for 2k >= n,   alpha_k = s a_k C(2k,n) (h_k - H_{2k} + H_{2k-n}),
//                    beta_k  = -s a_k C(2k,n),  s = (-1)^n.
EvalResult omega_tilde_deriv_series(const OmegaQuery& q, double cancellation_cap) {
  check_index(q.idx);
  const int n = q.idx.n;
  const int m = q.idx.m;
  const double xd = q.x;
  if (!(xd > 0.0) || !std::isfinite(xd)) throw DomainError("x must be positive and finite");
  if (xd > kSeriesMaxX) throw DomainError("series evaluation needs x <= 40");

  const int k_floor = (std::max(n, m) + 1) / 2 + static_cast<int>(xd) + 8;
  const int k_limit = 4 * k_floor + 200;
  const int j_limit = 2 * k_limit + n + m + 2;

  std::vector<Mp> fact(j_limit + 1), harm(j_limit + 1);
  fact[0] = 1;
  harm[0] = 0;
  for (int j = 1; j <= j_limit; ++j) {
    fact[j] = fact[j - 1] * j;
    harm[j] = harm[j - 1] + Mp(1) / j;
  }
  const Mp x = xd;
  const Mp lx = log(x);
  const Mp shift = boost::math::constants::ln_two<Mp>() - boost::math::constants::euler<Mp>();
  const Mp sign_n = (n % 2 == 0) ? 1 : -1;

  Mp sum = 0, abs_sum = 0, last = 0;
  Mp a = 1;  // 1 / (4^k k!^2)
  int k = 0;
  for (; k <= k_limit; ++k) {
    if (k > 0) a /= Mp(4) * k * k;
    const int j = 2 * k;
    Mp alpha, beta = 0;
    if (j < n) {
      alpha = a * fact[j] * fact[n - j - 1] / fact[n];
    } else {
      const Mp c = a * fact[j] / (fact[n] * fact[j - n]);
      alpha = sign_n * c * (harm[k] + shift - harm[j] + harm[j - n]);
      beta = -sign_n * c;
    }
    // m-th derivatives of x^j and x^j ln x.
    Mp term, mag;
    if (j >= m) {
      const Mp p = fact[j] / fact[j - m] * pow(x, j - m);
      const Mp lpart = lx + harm[j] - harm[j - m];
      term = alpha * p + beta * p * lpart;
      mag = abs(alpha * p) + abs(beta * p) * (abs(lx) + abs(harm[j] - harm[j - m]));
    } else {
      const Mp p = fact[j] * fact[m - j - 1] * pow(x, j - m);
      const Mp d_log = ((m - j - 1) % 2 == 0) ? p : Mp(-p);
      term = beta * d_log;
      mag = abs(term);
    }
    sum += term;
    abs_sum += mag;
    last = abs(term);
    if (k >= k_floor && last <= abs_sum * Mp(1e-118)) break;
  }
  if (k > k_limit) throw Error("small-argument series did not converge");

  const double value = static_cast<double>(sum);
  const double mp_eps = std::ldexp(1.0, -398);
  // Tail beyond the stopping index decays at least geometrically with ratio < 1/2.
  const double mp_err = static_cast<double>(abs_sum * Mp(mp_eps * (4.0 * k + 16.0)) + Mp(2) * last);
  const double abs_err = 0.5 * kEps * std::abs(value) + mp_err;
  double cancel;
  if (value == 0.0)
    cancel = std::numeric_limits<double>::infinity();
  else
    cancel = std::max(1.0, mp_err / (kEps * std::abs(value)));
  return EvalResult::make(value, abs_err, cancel, cancellation_cap);
}

EvalResult omega_tilde_deriv_auto(const OmegaQuery& q, const QuadratureConfig& cfg) {
  if (q.x > kSeriesMaxX) return omega_tilde_deriv(q, cfg);
  try {
    const EvalResult r = omega_tilde_deriv(q, cfg);
    if (r.reliable) return r;
  } catch (const QuadratureFailure&) {
  }
  return omega_tilde_deriv_series(q, cfg.cancellation_cap);
}

}  // namespace omegak
