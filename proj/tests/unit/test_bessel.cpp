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
#include <random>

#include "frozen_values.hpp"
#include "omegak/bessel_eval.hpp"
#include "omegak/bessel_k.hpp"
#include "omegak/errors.hpp"

using namespace omegak;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(BesselK, MatchesHighPrecisionValues) {
  for (const auto& o : oracle::kBesselK) {
    EXPECT_LT(rel(bessel_k_oracle(o.order, o.x), o.value), 1e-12) << "K_" << o.order << "(" << o.x << ")";
  }
}

TEST(BesselK, SeriesAndFractionAgreeAcrossCrossover) {
  for (double x = 1.5; x <= 2.5; x += 0.05) {
    for (int order : {0, 1}) {
      const long double a = bessel_k01_series(order, x);
      const long double b = bessel_k01_cf(order, x);
      EXPECT_LT(std::abs(static_cast<double>((a - b) / b)), 1e-15) << order << " " << x;
    }
  }
}

TEST(BesselK, Recurrence) {
  const double k0 = bessel_k_oracle(0, 1.0), k1 = bessel_k_oracle(1, 1.0);
  EXPECT_NEAR(bessel_k_oracle(2, 1.0), k0 + 2.0 * k1, 1e-15);
  EXPECT_THROW(bessel_k_oracle(81, 1.0), CapExceeded);
}

TEST(OmegaTilde, AnchorValues) {
  EXPECT_LT(rel(omega_tilde({{0, 0}, 1.0}).value, 0.42102443824070833), 1e-10);
  EXPECT_LT(rel(omega_tilde({{1, 0}, 1.0}).value, 0.60190723019723457), 1e-10);
  EXPECT_LT(rel(omega_tilde({{1, 0}, 2.0}).value, 2.0 * 0.13986588181652243), 1e-10);
  EXPECT_LT(rel(omega_tilde_deriv({{0, 0}, 2.0}).value, 0.11389387274953344), 1e-10);
  EXPECT_THROW(omega_tilde({{2, 1}, 1.0}), DomainError);
  EXPECT_THROW(omega_tilde({{2, 0}, 0.0}), DomainError);
}

TEST(OmegaTilde, MatchesFrozenValues) {
  for (const auto& o : oracle::kOmega) {
    const OmegaQuery q{{o.n, o.m}, o.x};
    const EvalResult r = o.m == 0 ? omega_tilde(q) : omega_tilde_deriv_auto(q);
    ASSERT_TRUE(r.reliable) << o.n << " " << o.m << " " << o.x;
    EXPECT_LE(std::abs(r.value - o.value), r.abs_err + 1e-15 * std::abs(o.value)) << o.n << " " << o.m << " " << o.x;
    if (o.x <= kSeriesMaxX) {
      const EvalResult s = omega_tilde_deriv_series(q);
      EXPECT_LT(rel(s.value, o.value), 1e-14) << o.n << " " << o.m << " " << o.x;
    }
    if (o.n <= 80 && o.m <= 20) {
      const EvalResult b = o.m == 0 ? omega_tilde_oracle(q) : omega_tilde_deriv_oracle(q);
      if (b.reliable) EXPECT_LE(std::abs(b.value - o.value), b.abs_err + 1e-15 * std::abs(o.value));
    }
  }
}

TEST(OmegaTilde, DecayBoundExample) {
  const double v = omega_tilde({{3, 0}, 40.0}).value;
  EXPECT_LE(v, 3.0 * std::exp(std::sqrt(3.0) - 40.0 / (1.0 + std::sqrt(3.0))) / 2.0);
}

TEST(OmegaTilde, OracleAgreementRandom) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick_n(0, 40);
  std::uniform_real_distribution<double> lx(std::log(0.01), std::log(80.0));
  for (int i = 0; i < 100; ++i) {
    const OmegaQuery q{{pick_n(rng), 0}, std::exp(lx(rng))};
    const EvalResult a = omega_tilde(q);
    const EvalResult b = omega_tilde_oracle(q);
    EXPECT_LE(std::abs(a.value - b.value), a.abs_err + b.abs_err) << q.idx.n << " " << q.x;
  }
}

TEST(OmegaTilde, TwoIntegralFormsAgree) {
  for (int n : {0, 1, 4, 17, 60})
    for (double x : {0.05, 1.0, 9.0, 70.0}) {
      const EvalResult a = omega_tilde({{n, 0}, x});
      const EvalResult b = omega_tilde_sform(n, x);
      EXPECT_LE(std::abs(a.value - b.value), a.abs_err + b.abs_err) << n << " " << x;
    }
}

TEST(OmegaTilde, PositiveAndDecreasingForOrderZero) {
  double prev = INFINITY;
  for (double x = 0.01; x < 60.0; x *= 1.3) {
    const double v = omega_tilde({{0, 0}, x}).value;
    EXPECT_GT(v, 0.0);
    EXPECT_LT(v, prev);
    prev = v;
  }
  for (int n : {1, 5, 30, 200})
    for (double x : {0.01, 3.0, 250.0}) EXPECT_GT(omega_tilde({{n, 0}, x}).value, 0.0);
}

TEST(OmegaTildeDeriv, FiniteDifferenceOfOrderZero) {
  const double h = 1e-5, x = 1.5;
  const double fd =
      (omega_tilde_deriv({{2, 0}, x + h}).value - omega_tilde_deriv({{2, 0}, x - h}).value) / (2.0 * h);
  EXPECT_NEAR(omega_tilde_deriv({{2, 1}, x}).value, fd, 1e-7);
}

TEST(OmegaTildeDeriv, HigherFiniteDifferences) {
  // Central differences of order m <= 3 at well-conditioned points.
  for (int n : {1, 4, 9})
    for (double x : {2.0, 6.0}) {
      const double h = 2e-3;
      auto f = [&](double y) { return omega_tilde({{n, 0}, y}).value; };
      const double d2 = (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
      const double d3 = (f(x + 2 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2 * h)) / (2.0 * h * h * h);
      EXPECT_LT(rel(omega_tilde_deriv({{n, 2}, x}).value, d2), 1e-5) << n << " " << x;
      EXPECT_LT(rel(omega_tilde_deriv({{n, 3}, x}).value, d3), 1e-4) << n << " " << x;
    }
}

TEST(OmegaTildeDeriv, SmallArgumentCancellationIsFlagged) {
  const OmegaQuery q{{20, 8}, 0.05};
  try {
    EXPECT_FALSE(omega_tilde_deriv(q).reliable);
  } catch (const QuadratureFailure&) {
  }
  const EvalResult s = omega_tilde_deriv_series(q);
  EXPECT_TRUE(s.reliable);
  EXPECT_TRUE(omega_tilde_deriv_auto(q).reliable);
  EXPECT_EQ(omega_tilde_deriv_auto(q).value, s.value);
  EXPECT_THROW(omega_tilde_deriv_series({{1, 1}, 41.0}), DomainError);
}

TEST(OmegaTildeDeriv, SeriesMatchesSymbolicOracle) {
  for (int n : {0, 3, 12, 40})
    for (int m : {1, 4, 9})
      for (double x : {0.3, 2.5, 11.0}) {
        const OmegaQuery q{{n, m}, x};
        const EvalResult a = omega_tilde_deriv_series(q);
        const EvalResult b = omega_tilde_deriv_oracle(q);
        if (!b.reliable) continue;
        EXPECT_LE(std::abs(a.value - b.value), a.abs_err + b.abs_err) << n << " " << m << " " << x;
      }
}

TEST(GnIntegral, Normalized) {
  for (int n : {0, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 200}) {
    const EvalResult r = gn_integral(n);
    EXPECT_NEAR(r.value, 1.0, 1e-10) << n;
  }
}

TEST(QuadratureConfig, Validation) {
  QuadratureConfig c;
  c.abs_tol = 0.0;
  EXPECT_THROW(c.validate(), DomainError);
  QuadratureConfig d;
  d.max_subdivisions = 2;
  d.rel_tol = 1e-15;
  d.abs_tol = 1e-20;
  EXPECT_THROW(omega_tilde({{40, 0}, 3.0}, d), QuadratureFailure);
  try {
    omega_tilde({{40, 0}, 3.0}, d);
  } catch (const QuadratureFailure& e) {
    EXPECT_TRUE(std::isfinite(e.best_estimate()));
  }
}

TEST(QuadratureConfig, FixedTruncation) {
  QuadratureConfig c;
  c.tail_rule = TailRule::kFixed;
  c.fixed_u_max = 8.0;
  EXPECT_LT(rel(omega_tilde({{0, 0}, 1.0}, c).value, 0.42102443824070833), 1e-10);
}
