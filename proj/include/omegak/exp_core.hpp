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

#include "omegak/eval_result.hpp"
#include "omegak/exact.hpp"

namespace omegak {

inline constexpr int kMaxOrder = 2000;
inline constexpr int kMaxDerivative = 60;
/// Largest n + m accepted by the recursion route.
inline constexpr int kMaxRecursiveOrder = 300;

/// Index pair (n, m) of g_n^(m) and of the omega-tilde family.
struct FamilyIndex {
  int n = 0;
  int m = 0;
};

/// Throws DomainError for negative indices and CapExceeded beyond the caps.
void check_index(FamilyIndex idx);

/// ln(n!) from a table built on first use; valid for 0 <= n <= kMaxOrder + kMaxDerivative.
double log_factorial(int n);
long double log_factorial_ld(int n);

/// ln g_n(t) with g_n(t) = t^n e^{-t} / n!.  Returns -inf at t = 0 for n > 0.
double gn_log(int n, double t);
/// g_n(t); gn_eval(n, 0) is 1 for n = 0 and 0 otherwise.
double gn_eval(int n, double t);
/// g_n(t) with an error estimate.
EvalResult gn_value(int n, double t);

/// Coefficients of s_{n,m}(t) = sum_l binom(m,l) (-1)^{m-l} n!/(n-l)! t^{m-l},
/// so that t^m g_n^(m)(t) = g_n(t) s_{n,m}(t).
struct SnmPolynomial {
  int n = 0;
  int m = 0;
  /// coefficients[l] multiplies t^{m-l}, 0 <= l <= min(m, n).
  std::vector<Rational> coefficients;

  Rational evaluate(const Rational& t) const;
};

SnmPolynomial snm_polynomial(FamilyIndex idx);

/// g_n^(m)(t) from the factorization g_n(t) s_{n,m}(t) / t^m.
EvalResult gn_deriv_closed(FamilyIndex idx, double t);
/// g_n^(m)(t) from sum_j binom(m,j) (-1)^{m-j} g_{n-j}(t), the unrolled form of
/// g_k' = g_{k-1} - g_k.  The polynomial part is summed exactly at the binary
/// value of t, so the only rounding is the final conversion.
EvalResult gn_deriv_recursive(FamilyIndex idx, double t);
/// g_n^(m)(t) through the expansion of s_{n,m} around t = n in delta = n - t.
EvalResult gn_deriv_delta(FamilyIndex idx, double t);

enum class DerivRoute { kClosed, kDelta, kRecursive, kBest };

/// g_n^(m)(t) by the requested route.  kBest takes the closed route when it is
/// well conditioned, otherwise whichever of closed and delta reports the
/// smaller error, and the recursion when both are unreliable and n + m <= 300.
EvalResult gn_deriv(FamilyIndex idx, double t, DerivRoute route = DerivRoute::kBest);

/// t^power * g_n^(m)(t), evaluated without forming t^power separately when
/// that would overflow.
EvalResult weighted_gn_deriv(FamilyIndex idx, int power, double t,
                             DerivRoute route = DerivRoute::kBest);

/// Extended precision closed form, used where residuals near 1e-10 of O(1e5)
/// quantities are needed.
long double gn_deriv_ld(FamilyIndex idx, long double t);

}  // namespace omegak
