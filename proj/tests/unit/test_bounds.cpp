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

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "omegak/bounds.hpp"
#include "omegak/errors.hpp"

using namespace omegak;

TEST(OmegaBounds, GeneralFormula) {
  EXPECT_NEAR(rhs_omega_general(0, 0, 1.0, 1.0), 1.0 / std::sqrt(3.0) + 1.0 + std::log(2.0), 1e-14);
  EXPECT_NEAR(rhs_omega_general(0, 0, 1.0, 1.0), 2.2704974497, 1e-9);
  EXPECT_NEAR(rhs_omega_general(3, 0, 1.0, 1.0), 1.0773502692, 1e-9);
  EXPECT_NEAR(rhs_omega_general(0, 2, 2.0, 1.0), 0.5, 1e-15);
}

TEST(OmegaBounds, MonotoneInGamma) {
  for (int n : {0, 3, 20})
    for (int m : {0, 1, 5})
      for (double x : {0.01, 1.0, 30.0}) {
        double prev = 0.0;
        for (double g = 1.0; g <= 64.0; g *= 1.7) {
          const double v = rhs_omega_general(n, m, x, g);
          EXPECT_GE(v, prev);
          prev = v;
        }
      }
}

TEST(OmegaBounds, SmallArgument) {
  EXPECT_NEAR(rhs_omega_small(100, 0, 1.0, 6.0), 1.0 / std::sqrt(3.0) + 6.0 / std::sqrt(101.0), 1e-14);
  EXPECT_TRUE(small_argument_m_range(100, 3, 2));
  EXPECT_TRUE(small_argument_m_condition(100, 3));
  EXPECT_FALSE(small_argument_m_range(4, 3, 2));
  EXPECT_FALSE(region_omega_small(4, 3, 0.1, 1.0, 2));
  EXPECT_TRUE(region_omega_small(100, 3, 1.0, 6.0, 2));
  EXPECT_THROW(rhs_omega_small(4, 3, 0.1, 1.0, 2), RegionViolation);
}

TEST(OmegaBounds, LargeArgument) {
  EXPECT_NEAR(rhs_omega_large(0, 1, 10.0, 1.0), 0.1, 1e-16);
  EXPECT_FALSE(region_omega_large(3, 3, 100.0));
  EXPECT_TRUE(region_omega_large(3, 4, 100.0));
  EXPECT_DOUBLE_EQ(omega_large_threshold(4, 4), 20.0);
  EXPECT_FALSE(region_omega_large(4, 4, 20.0));
  EXPECT_THROW(rhs_omega_large(4, 4, 20.0, 1.0), RegionViolation);
}

TEST(OmegaBounds, ExpDecay) {
  EXPECT_NEAR(rhs_omega_expdecay(0, 1.0), 3.0 * std::exp(-1.0), 1e-15);
  EXPECT_NEAR(rhs_omega_expdecay(4, 6.0), 3.0 / std::sqrt(5.0), 1e-15);
  EXPECT_NEAR(rhs_omega_expdecay(0, 19.52), 1.0e-8, 3e-11);
  EXPECT_THROW(rhs_omega_expdecay(4, 5.9), RegionViolation);
}

TEST(GBounds, General) {
  const double four_e = 4.0 * std::exp(1.0);
  EXPECT_NEAR(rhs_g_general(0, 0, 0), std::pow(four_e, 3) * 2.0, 1e-9);
  EXPECT_NEAR(rhs_g_general(0, 0, 0), 2570.95, 0.01);
  EXPECT_NEAR(rhs_g_general(3, 1, 0), std::pow(four_e, 4) * 6.0, 1e-8);
  EXPECT_DOUBLE_EQ(rhs_g_general(0, 0, 1), g_general_constant(0));
}

TEST(GBounds, SmallArgument) {
  EXPECT_NEAR(rhs_g_small(9, 1, 3.0), 36.0 / std::sqrt(10.0), 1e-13);
  EXPECT_NEAR(rhs_g_small(0, 0, 0.0), 4.0, 1e-15);
  EXPECT_TRUE(region_g_small(9, 2, 3.0));
  EXPECT_FALSE(region_g_small(9, 2, 3.0000001));
}

TEST(GBounds, LargeArgument) {
  const double base = 3.0 / std::log(10.0 / 9.0);
  EXPECT_NEAR(base, 28.4737, 1e-4);
  EXPECT_NEAR(rhs_g_large(0, 1, 0, 5.0), 4.0 * base * 6.0, 1e-10);
  EXPECT_FALSE(region_g_large(6, 3, 100.0));
  EXPECT_TRUE(region_g_large(6, 4, 100.0));
}

TEST(GBounds, ExpDecayVariants) {
  EXPECT_DOUBLE_EQ(rhs_g_expdecay(0, 5.0).asymptotic, std::exp(-5.0));
  EXPECT_FALSE(rhs_g_expdecay(0, 5.0).sharp.has_value());
  EXPECT_NEAR(rhs_g_expdecay(4, 6.0).asymptotic, 1.0 / std::sqrt(5.0), 1e-15);
  EXPECT_NEAR(rhs_g_expdecay(9, 12.0).asymptotic, 1.0 / std::sqrt(10.0), 1e-15);
  for (int n = 1; n <= 200; n += 9)
    for (double f : {1.0, 1.3, 3.0, 10.0}) {
      const double t = (n + std::sqrt(static_cast<double>(n))) * f;
      const auto v = rhs_g_expdecay(n, t);
      ASSERT_TRUE(v.sharp.has_value());
      EXPECT_LE(*v.sharp, v.asymptotic * (1.0 + 1e-12)) << n << " " << t;
    }
}

TEST(GBounds, Bands) {
  EXPECT_NEAR(rhs_g_band(BandVariant::kGaussian, 4, 0, 2.0), std::exp(-0.5) / std::sqrt(5.0), 1e-15);
  EXPECT_NEAR(rhs_g_band(BandVariant::kBelowPeak, 9, 0, 6.0), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(rhs_g_band(BandVariant::kAbovePeak, 4, 0, 6.0, 0), std::pow(4.0 * std::exp(1.0), 3), 1e-9);
  EXPECT_THROW(rhs_g_band(BandVariant::kBelowPeak, 9, 0, 7.0), RegionViolation);
}

TEST(Catalog, ContainsEveryBound) {
  const auto ids = bound_ids();
  for (const char* id : {"estomegatildenm1", "estomegatildenm1sa-C2", "estomegatildenm1sa-C4", "estomegatildenm1la",
                         "exponentialdecayomegatilde", "estgntilde", "estgntildesa", "estgntildela",
                         "estgnasymptotic", "defDm", "defDmsa", "repgknm2", "tmgplus", "tmgplusla", "expdecay"}) {
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
  }
  EXPECT_THROW(find_bound("nope"), std::out_of_range);
}

TEST(Catalog, DocumentedPoints) {
  const BoundSpec& general = find_bound("estomegatildenm1");
  EXPECT_NEAR(general.rhs({0, 0, 0, 1.0}, general.defaults), 2.2704974497, 1e-9);
  const BoundSpec& dmsa = find_bound("defDmsa");
  EXPECT_NEAR(dmsa.rhs({9, 1, 0, 3.0}, dmsa.defaults), 11.384, 1e-3);
  const BoundSpec& asym = find_bound("estgnasymptotic");
  EXPECT_TRUE(region_membership(asym, {4, 0, 0, 6.0}, asym.defaults));
  EXPECT_FALSE(region_membership(asym, {4, 1, 0, 6.0}, asym.defaults));
}

TEST(Catalog, RegionAndRhsAgreeOnDomain) {
  // Wherever membership holds the right side evaluates to a positive finite value.
  for (const auto& spec : bound_catalog())
    for (int n : {0, 1, 4, 25})
      for (int m : {0, 1, 3, 7})
        for (double x : {0.01, 0.5, 3.0, 30.0, 300.0})
          for (int ell : spec.ell_values) {
            const BoundPoint p{n, m, ell, x};
            if (!region_membership(spec, p, spec.defaults)) continue;
            const double v = spec.rhs(p, spec.defaults);
            EXPECT_TRUE(std::isfinite(v) && v > 0.0) << spec.id;
          }
}

TEST(Catalog, JsonExport) {
  const auto j = nlohmann::json::parse(bound_catalog_json());
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), bound_catalog().size());
  for (const auto& b : j) {
    EXPECT_TRUE(b.contains("id"));
    EXPECT_TRUE(b.contains("formula"));
    EXPECT_TRUE(b.contains("region"));
  }
}
