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

#include "omegak/eval_result.hpp"
#include "omegak/exp_core.hpp"

namespace omegak {

/// How the semi-infinite integration range is cut off.
enum class TailRule {
  /// Extend the range until the exponential-decay bound on the neglected
  /// tail is below a tenth of the error target; the bound joins abs_err.
  kDecayBound,
  /// Stop at fixed_u_max with no tail term in abs_err.
  kFixed,
};

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
  TailRule tail_rule = TailRule::kDecayBound;
  double fixed_u_max = 0.0;
  double cancellation_cap = kDefaultCancellationCap;

  /// Throws DomainError on nonpositive tolerances or limits.
  void validate() const;
};

struct OmegaQuery {
  FamilyIndex idx;
  double x = 1.0;
};

/// omega~_n(x) = integral over u >= 0 of g_n(x cosh u); requires m = 0.
EvalResult omega_tilde(const OmegaQuery& q, const QuadratureConfig& cfg = {});

/// m-th derivative of omega~_n at x: integral over u >= 0 of
/// cosh^m(u) g_n^(m)(x cosh u).
EvalResult omega_tilde_deriv(const OmegaQuery& q, const QuadratureConfig& cfg = {});

/// omega~_n(x) from the substitution t = x (1 + v^2):
/// integral over v >= 0 of 2 g_n(x (1 + v^2)) / sqrt(v^2 + 2).
EvalResult omega_tilde_sform(int n, double x, const QuadratureConfig& cfg = {});

/// Integral of g_n over [0, inf); equals 1.
EvalResult gn_integral(int n, const QuadratureConfig& cfg = {});

/// omega~_n(x) = (x/2)^n / n! * sum_k binom(n,k) K_{|n-2k|}(x); m = 0, n <= 80.
EvalResult omega_tilde_oracle(const OmegaQuery& q);

/// m-th derivative of the same linear combination, differentiated
/// symbolically with K_b' = -(K_{|b-1|} + K_{b+1})/2; n <= 80, m <= 20.
EvalResult omega_tilde_deriv_oracle(const OmegaQuery& q);

/// Largest x accepted by omega_tilde_deriv_series.
inline constexpr double kSeriesMaxX = 40.0;

/// m-th derivative of omega~_n from the power-log expansion of K_0 about 0,
/// summed in 400-bit floating point.  Free of the x^-m cancellation that the
/// quadrature suffers at small x; x <= kSeriesMaxX.
EvalResult omega_tilde_deriv_series(const OmegaQuery& q, double cancellation_cap = kDefaultCancellationCap);

/// omega_tilde_deriv, switching to omega_tilde_deriv_series when the
/// quadrature is unreliable or fails and x is in the series range.
EvalResult omega_tilde_deriv_auto(const OmegaQuery& q, const QuadratureConfig& cfg = {});

}  // namespace omegak
