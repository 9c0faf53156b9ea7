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

#include <vector>

#include "omegak/bessel_eval.hpp"
#include "omegak/exact.hpp"

namespace omegak {

/// T_mu(z) = sum_{l < mu} C(2l, l) (z/2)^{2l}, the truncated Taylor series
/// of 1 / sqrt(1 - z^2).
struct TaylorKernel {
  int mu = 1;
  /// coefficients[l] multiplies z^{2l}.
  std::vector<Rational> coefficients;
  /// 2^{1-2mu} mu C(2mu, mu), an upper bound for T_mu on [0, 1].
  Rational c_mu;
};

TaylorKernel taylor_kernel(int mu);

/// T_mu(z) for 0 <= z < 1.
double tmu_eval(int mu, double z);

struct TaylorRemainderCheck {
  double lhs = 0;
  double rhs = 0;
  bool pass = false;
};

/// |1/sqrt(t^2 - x^2) - T_mu(x/t)/t| against (x/t)^{2mu} / sqrt(t^2 - x^2),
/// both in 100-digit arithmetic; pass when lhs <= rhs (1 + 1e-12).
TaylorRemainderCheck taylor_remainder_check(int mu, double t, double x);

struct IdentityResidual {
  /// Integral over [x, inf) of t^{m-1-2r} g_n^(m)(t).
  double lhs = 0;
  double lhs_err = 0;
  /// -((n-1-2r)!/n!) (d/dx)^{2r} (x^m g_{n-1-2r}^{(m-1-2r)}(x)).
  double rhs = 0;
  double residual = 0;
};

/// Both sides of the integral identity for derivatives of g_n.  Requires
/// 0 <= 2r <= n-1 and m >= 1 + 2r; throws DomainError otherwise.
IdentityResidual integral_identity(int n, int m, int r, double x, const QuadratureConfig& cfg = {});

/// |lhs - rhs| of integral_identity.
double integral_identity_residual(int n, int m, int r, double x, const QuadratureConfig& cfg = {});

struct TaylorGridResult {
  long checked = 0;
  long failed = 0;
  /// Largest lhs / rhs over points with rhs > 0.
  double worst_ratio = 0.0;
  int worst_mu = 0;
  double worst_t = 0.0;
  double worst_x = 0.0;
};

/// taylor_remainder_check for mu in [1, mu_max] on t log-spaced in
/// [1.001, 100] and x/t in {0} plus log-spaced values up to 0.999.
TaylorGridResult taylor_remainder_grid(int mu_max = 8, int t_points = 50, int z_points = 50);

struct IdentityGridResult {
  long checked = 0;
  long failed = 0;
  double worst_residual = 0.0;
  int worst_n = 0, worst_m = 0, worst_r = 0;
  double worst_x = 0.0;
};

/// integral_identity_residual over all admissible n <= max_n, m <= max_m,
/// r <= max_r and the listed x; failed counts residuals above threshold.
IdentityGridResult integral_identity_grid(int max_n = 30, int max_m = 10, int max_r = 3,
                                          const std::vector<double>& xs = {0.5, 1.0, 2.0, 5.0, 10.0},
                                          double threshold = 1e-9, const QuadratureConfig& cfg = {},
                                          int threads = 0);

struct DoubleFactorialCheck {
  /// Natural logs of (3/5)^k sqrt(m!/(m-k)!), m!!/(m-k)!!, 2^k sqrt(m!/(m-k)!).
  double log_lower = 0;
  double log_mid = 0;
  double log_upper = 0;
  bool pass = false;
};

/// Two-sided double factorial ratio bound, decided in exact integers;
/// 0 <= k <= m <= 400.
DoubleFactorialCheck double_factorial_check(int m, int k);

struct DoubleFactorialSweep {
  long checked = 0;
  long failed = 0;
  int first_failed_m = -1;
  int first_failed_k = -1;
};

/// double_factorial_check for every 0 <= k <= m <= max_m.
DoubleFactorialSweep double_factorial_sweep(int max_m = 400);

}  // namespace omegak
