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
#include <sstream>

#include "omegak/cq_kernel.hpp"
#include "omegak/errors.hpp"

using namespace omegak;

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(a + (b - a) * i / (n - 1));
  return v;
}

}  // namespace

TEST(CutoffRadius, Definition) {
  EXPECT_TRUE(std::isinf(cutoff_radius(3, 0.0)));
  for (int n : {0, 1, 4, 30, 100})
    for (double tol : {1e-6, 1e-10, 1e-14}) {
      const double r = cutoff_radius(n, tol);
      const double s = std::sqrt(static_cast<double>(n));
      EXPECT_GE(r, std::max(1.0, n + s));
      auto bound = [&](double x) {
        return 3.0 * std::exp(s - x / (1.0 + s)) / (2.0 * std::numbers::pi * std::sqrt(n + 1.0));
      };
      EXPECT_LE(bound(r), tol * (1.0 + 1e-12));
      if (r > std::max(1.0, n + s) + 1e-9) EXPECT_GT(bound(r * (1.0 - 1e-6)), tol);
    }
  EXPECT_THROW(cutoff_radius(-1, 1e-6), DomainError);
  EXPECT_THROW(cutoff_radius(1, -1.0), DomainError);
}

TEST(KernelTable, ValuesAndCutoff) {
  const auto d = linspace(0.5, 60.0, 25);
  const KernelTable t = build_table(1.0, d, 10, 1e-10);
  ASSERT_EQ(t.values.size(), 11u);
  EXPECT_EQ(t.entries(), 11u * 25u);
  EXPECT_NEAR(t.values[0][0], omega_tilde({{0, 0}, 0.5}).value / (2.0 * std::numbers::pi), 1e-15);
  for (int n = 0; n <= 10; ++n) {
    const double rad = cutoff_radius(n, 1e-10);
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (static_cast<int>(j) >= t.cutoff[n]) {
        EXPECT_EQ(t.values[n][j], 0.0);
        EXPECT_GE(d[j], rad);
      } else {
        EXPECT_GT(t.values[n][j], 0.0);
      }
    }
  }
  EXPECT_GT(t.zeroed(), 0u);
  EXPECT_NEAR(t.sparsity(), static_cast<double>(t.zeroed()) / t.entries(), 1e-15);
}

TEST(KernelTable, NoCutoffWhenTolZero) {
  const KernelTable t = build_table(1.0, {1.0, 50.0}, 3, 0.0);
  EXPECT_EQ(t.zeroed(), 0u);
}

TEST(KernelTable, ScalingIsBitExact) {
  const auto d = linspace(0.25, 12.0, 9);
  std::vector<double> d2;
  for (double v : d) d2.push_back(2.0 * v);
  const KernelTable a = build_table(1.0, d, 6, 1e-12);
  const KernelTable b = build_table(2.0, d2, 6, 1e-12);
  EXPECT_EQ(a.values, b.values);
}

TEST(KernelTable, RejectsBadInput) {
  EXPECT_THROW(build_table(0.0, {1.0}, 2, 1e-8), DomainError);
  EXPECT_THROW(build_table(1.0, {0.0}, 2, 1e-8), DomainError);
  EXPECT_THROW(build_table(1.0, {1.0}, -1, 1e-8), DomainError);
  EXPECT_THROW(build_table(1.0, {1.0}, 2, -1e-8), DomainError);
}

TEST(KernelTable, SpotCheckFindsNothing) {
  const KernelTable t = build_table(0.5, linspace(1.0, 40.0, 40), 12, 1e-8);
  const auto c = spot_check_cutoffs(t, 0.5, 99);
  EXPECT_GT(c.sampled, 0);
  EXPECT_EQ(c.violations, 0);
  EXPECT_LE(c.worst, 1e-8);
}

TEST(KernelTable, BinaryRoundTrip) {
  const KernelTable t = build_table(0.75, linspace(0.5, 30.0, 7), 5, 1e-9);
  std::stringstream ss;
  write_table_binary(t, ss);
  const std::string bytes = ss.str();
  EXPECT_EQ(bytes.substr(0, 5), "OMGK1");
  EXPECT_EQ(bytes.size(), 5u + 4 + 4 + 8 + 8 + 8 * 6 * 7 + 8 * 7);
  const KernelTable r = read_table_binary(ss);
  EXPECT_EQ(r.n_max, 5);
  EXPECT_EQ(r.dt, 0.75);
  EXPECT_EQ(r.tol, 1e-9);
  EXPECT_EQ(r.distances, t.distances);
  EXPECT_EQ(r.values, t.values);
  std::stringstream bad("OMGK2xxxxxxxxxxxx");
  EXPECT_THROW(read_table_binary(bad), Error);
}

TEST(KernelTable, Csv) {
  const KernelTable t = build_table(1.0, {1.0, 2.0}, 1, 0.0);
  const std::string csv = table_csv(t);
  EXPECT_EQ(csv.rfind("n,d,value\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}

TEST(Convolve, MatchesDirectSum) {
  const KernelTable t = build_table(1.0, {0.5, 2.0, 7.0}, 6, 0.0);
  const std::vector<double> phi{1.0, -0.5, 0.25, 2.0, 0.0, 1.5, -1.0};
  const auto u = convolve(t, phi, 4);
  ASSERT_EQ(u.size(), 3u);
  for (int j = 0; j < 3; ++j) {
    double s = 0.0;
    for (int n = 0; n <= 4; ++n) s += t.values[n][j] * phi[4 - n];
    EXPECT_NEAR(u[j], s, 1e-15 * (1.0 + std::abs(s)));
  }
  const std::vector<std::vector<double>> per(3, phi);
  EXPECT_EQ(convolve(t, per, 4), u);
  EXPECT_THROW(convolve(t, phi, 7), DomainError);
}
