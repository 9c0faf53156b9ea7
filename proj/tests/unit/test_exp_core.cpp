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
#include <numbers>
#include <random>

#include "frozen_values.hpp"
#include "omegak/delta_expansion.hpp"
#include "omegak/errors.hpp"
#include "omegak/exp_core.hpp"

using namespace omegak;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(GnValue, TrivialValues) {
  EXPECT_NEAR(gn_eval(0, 1.0), std::exp(-1.0), 1e-16);
  EXPECT_NEAR(gn_eval(1, 1.0), std::exp(-1.0), 1e-16);
  EXPECT_DOUBLE_EQ(gn_log(0, 3.5), -3.5);
  EXPECT_EQ(gn_eval(0, 0.0), 1.0);
  EXPECT_EQ(gn_eval(4, 0.0), 0.0);
  EXPECT_THROW(gn_eval(2, -1.0), DomainError);
}

TEST(GnValue, MatchesHighPrecisionOracle) {
  for (const auto& o : oracle::kG) {
    const EvalResult r = gn_value(o.n, o.t);
    EXPECT_LT(rel(r.value, o.value), 1e-13) << "n=" << o.n << " t=" << o.t;
    EXPECT_LE(std::abs(r.value - o.value), r.abs_err + 1e-300) << "n=" << o.n << " t=" << o.t;
  }
}

TEST(GnValue, OrderRecurrence) {
  for (int n = 1; n <= 400; n += 7)
    for (double t : {0.3, 1.0, 7.5, 50.0, 399.0}) {
      const EvalResult a = gn_value(n, t);
      const EvalResult b = gn_value(n - 1, t);
      if (a.value < 1e-290) continue;
      const double rhs = t / n * b.value;
      EXPECT_LE(std::abs(a.value - rhs), a.abs_err + t / n * b.abs_err + 4e-16 * rhs) << n << " " << t;
    }
}

TEST(GnValue, NoOverflowAtCaps) {
  const double v = gn_eval(2000, 2000.0);
  EXPECT_TRUE(std::isfinite(v));
  EXPECT_NEAR(v, 1.0 / std::sqrt(2.0 * std::numbers::pi * 2000.0), 1e-5);
  EXPECT_THROW(gn_eval(2001, 1.0), CapExceeded);
}

TEST(SnmPolynomial, CoefficientsAndConstantRow) {
  const SnmPolynomial s0 = snm_polynomial({7, 0});
  ASSERT_EQ(s0.coefficients.size(), 1u);
  EXPECT_EQ(s0.coefficients[0], 1);
  const SnmPolynomial s = snm_polynomial({5, 3});
  ASSERT_EQ(s.coefficients.size(), 4u);
  // binom(3,l) (-1)^{3-l} 5!/(5-l)!
  EXPECT_EQ(s.coefficients[0], -1);
  EXPECT_EQ(s.coefficients[1], 15);
  EXPECT_EQ(s.coefficients[2], -60);
  EXPECT_EQ(s.coefficients[3], 60);
  EXPECT_EQ(snm_polynomial({2, 1}).evaluate(Rational(2)), 0);
}

TEST(GnDeriv, DocumentedValues) {
  EXPECT_NEAR(gn_deriv_closed({3, 0}, 2.0).value, 8.0 * std::exp(-2.0) / 6.0, 1e-16);
  EXPECT_EQ(gn_deriv_closed({2, 1}, 2.0).value, 0.0);
  EXPECT_EQ(gn_deriv_delta({2, 1}, 2.0).value, 0.0);
  EXPECT_NEAR(gn_deriv_recursive({0, 2}, 1.0).value, std::exp(-1.0), 1e-16);
  EXPECT_NEAR(gn_deriv_recursive({1, 1}, 3.0).value, -2.0 * std::exp(-3.0), 1e-16);
}

TEST(GnDeriv, AllRoutesMatchOracle) {
  for (const auto& o : oracle::kGDeriv) {
    for (DerivRoute route : {DerivRoute::kClosed, DerivRoute::kDelta, DerivRoute::kRecursive, DerivRoute::kBest}) {
      if (route == DerivRoute::kRecursive && o.n + o.m > kMaxRecursiveOrder) continue;
      const EvalResult r = gn_deriv({o.n, o.m}, o.t, route);
      if (!r.reliable) continue;
      EXPECT_LE(std::abs(r.value - o.value), r.abs_err + 4e-16 * std::abs(o.value))
          << "n=" << o.n << " m=" << o.m << " t=" << o.t << " route=" << static_cast<int>(route);
    }
    const EvalResult best = gn_deriv({o.n, o.m}, o.t);
    EXPECT_TRUE(best.reliable) << "n=" << o.n << " m=" << o.m;
    EXPECT_LT(rel(best.value, o.value), 1e-10) << "n=" << o.n << " m=" << o.m << " t=" << o.t;
  }
}

TEST(GnDeriv, ThreeWayAgreementOnRandomPoints) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick_n(0, 100), pick_m(0, 10);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  int compared = 0;
  for (int i = 0; i < 2000; ++i) {
    const int n = pick_n(rng), m = pick_m(rng);
    const double t = std::max(1e-3, n + u(rng) * std::sqrt(n + 1.0) * 2.0);
    const EvalResult a = gn_deriv_closed({n, m}, t);
    const EvalResult b = gn_deriv_delta({n, m}, t);
    const EvalResult c = gn_deriv_recursive({n, m}, t);
    if (a.reliable && c.reliable) {
      EXPECT_LE(std::abs(a.value - c.value), a.abs_err + c.abs_err) << n << " " << m << " " << t;
      ++compared;
    }
    if (b.reliable && c.reliable) EXPECT_LE(std::abs(b.value - c.value), b.abs_err + c.abs_err) << n << " " << m << " " << t;
  }
  EXPECT_GT(compared, 1000);
}

TEST(GnDeriv, DerivativeRecurrence) {
  for (int n = 1; n <= 60; n += 3)
    for (int m = 1; m <= 10; ++m)
      for (double t : {0.5, n * 0.7 + 0.1, n + 0.25, n * 1.5 + 2.0}) {
        const EvalResult lhs = gn_deriv_recursive({n, m}, t);
        const EvalResult a = gn_deriv_recursive({n - 1, m - 1}, t);
        const EvalResult b = gn_deriv_recursive({n, m - 1}, t);
        const double scale = std::abs(a.value) + std::abs(b.value);
        EXPECT_LE(std::abs(lhs.value - (a.value - b.value)), 1e-12 * scale + 1e-300) << n << " " << m << " " << t;
      }
}

TEST(GnDeriv, CancellationIsFlaggedNotFatal) {
  // Closed form near the peak at large m cancels heavily.
  const EvalResult r = gn_deriv_closed({1000, 60}, 1000.0);
  EXPECT_GT(r.cancellation, 1e3);
  EXPECT_NO_THROW(gn_deriv_closed({2000, 60}, 1999.0));
  EXPECT_THROW(gn_deriv_recursive({290, 20}, 10.0), CapExceeded);
}

TEST(GnDeriv, WeightedMatchesProduct) {
  for (int n : {0, 3, 40})
    for (int m : {0, 2, 7})
      for (double t : {0.2, 3.0, 45.0}) {
        const EvalResult w = weighted_gn_deriv({n, m}, m + 1, t);
        const EvalResult g = gn_deriv({n, m}, t);
        EXPECT_NEAR(w.value, g.value * std::pow(t, m + 1), 1e-12 * std::abs(w.value) + 1e-300);
      }
  // t^60 g_0^(60)(t) at t = 1e3 overflows neither factor separately in log form.
  const EvalResult big = weighted_gn_deriv({0, 60}, 61, 700.0);
  EXPECT_TRUE(std::isfinite(big.value));
}

TEST(DeltaExpansion, SmallCases) {
  const DeltaExpansion e1 = delta_expansion_build(1);
  ASSERT_EQ(e1.p.size(), 1u);
  EXPECT_EQ(e1.p[0][0], 0);
  EXPECT_EQ(e1.p[0][1], -1);
  EXPECT_EQ(c_coefficient(1, 3), Rational(1, 3));
  EXPECT_EQ(c_coefficient(0, 0), 1);
  EXPECT_EQ(c_coefficient(0, 5), 0);
  for (int k = 2; k <= 40; ++k) EXPECT_EQ(c_coefficient(1, k), Rational(1, k));
  EXPECT_EQ(c_coefficient(3, 6), Rational(1, 48));
}

TEST(DeltaExpansion, LeadingRowIsPowerOfMinusDelta) {
  for (int m = 0; m <= 20; ++m) {
    const DeltaExpansion& e = delta_expansion(m);
    for (int k = 0; k <= m; ++k) {
      const Rational expect = k == m ? Rational((m % 2 == 0) ? 1 : -1) : Rational(0);
      EXPECT_EQ(e.p[0][k], expect) << m << " " << k;
    }
    for (std::size_t l = 0; l < e.p.size(); ++l) EXPECT_LE(static_cast<int>(e.p[l].size()) - 1, m - 2 * static_cast<int>(l));
  }
}

TEST(DeltaExpansion, ReproducesSnmExactly) {
  const DeltaExpansion& e = delta_expansion(4);
  EXPECT_EQ(e.evaluate(7, Rational(2)), snm_polynomial({7, 4}).evaluate(Rational(5)));
  const DeltaExpansion& e2 = delta_expansion(2);
  EXPECT_EQ(e2.evaluate(10, Rational(0)), snm_polynomial({10, 2}).evaluate(Rational(10)));
}

TEST(DeltaExpansion, CoefficientBoundByOne) {
  for (int l = 0; l <= 20; ++l)
    for (int k = 2 * l; k <= 60; ++k) EXPECT_LE(c_coefficient(l, k), 1) << l << " " << k;
}

TEST(DeltaExpansion, CoefficientRelation) {
  for (int m = 0; m <= 12; ++m) {
    const DeltaExpansion& e = delta_expansion(m);
    for (int l = 0; 2 * l <= m; ++l)
      for (int k = 0; k <= m - 2 * l; ++k) EXPECT_EQ(e.p[l][k], a_coefficient(l, m, k)) << l << m << k;
  }
}
