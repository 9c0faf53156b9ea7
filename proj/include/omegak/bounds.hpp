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

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace omegak {

/// Free constants appearing in the bounds.  gamma is fitted by certify;
/// C parameterizes the small-argument bound; c = 9/10 is fixed in the
/// large-argument bounds for g_n.
struct BoundConstants {
  double gamma = 1.0;
  int C = 2;
  double c = 0.9;
};

/// One evaluation point: xt is x for the omega-tilde family and t for g_n.
struct BoundPoint {
  int n = 0;
  int m = 0;
  int ell = 0;
  double xt = 1.0;
};

// ---------------------------------------------------------------------------
// Region predicates.  Floors and integer conditions are evaluated exactly.

/// 2 floor(m log(n+1) / (4 log 2)) - 2 <= (n-1)/2.
bool small_argument_m_condition(int n, int m);
/// m <= sqrt(n) (C-1)/C, compared as m^2 C^2 <= n (C-1)^2.
bool small_argument_m_range(int n, int m, int C);
/// 0 < x <= min(n/(2C), (n+1)/(4 gamma)) together with the two m conditions.
bool region_omega_small(int n, int m, double x, double gamma, int C);
/// m >= 1 + 2 ln(n+1) and x beyond the n-dependent threshold.
bool region_omega_large(int n, int m, double x);
/// x-threshold of the large-argument bound: 0 for n <= 1, n + m (sqrt(n)+2) otherwise.
double omega_large_threshold(int n, int m);
/// x >= max(1, n + sqrt(n)).
bool region_omega_expdecay(int n, double x);

bool region_g_small(int n, int m, double t);        // 0 <= t <= n - m sqrt(n)
bool region_g_large(int n, int m, double t);        // m >= 2 ln(n+1), t >= threshold
double g_large_threshold(int n, int m);
bool region_g_expdecay(int n, double t);            // t >= n + sqrt(n)

// ---------------------------------------------------------------------------
// Right-hand sides.  Functions with a region throw RegionViolation outside it.

/// m! (gamma sqrt(n+1)/x)^m (d_{m,0}/sqrt(2x+1) + gamma/sqrt(n+1) (1 + d_{m+n,0} ln((x+1)/x))).
double rhs_omega_general(int n, int m, double x, double gamma);
/// Same shape with (gamma/x)^m.
double rhs_omega_small(int n, int m, double x, double gamma, int C = 2);
/// m! (gamma/x)^m.
double rhs_omega_large(int n, int m, double x, double gamma);
/// 3 exp(sqrt(n) - x/(1+sqrt(n))) / sqrt(n+1).
double rhs_omega_expdecay(int n, double x);

/// C_m = (4e)^{m+3} (m+2)!.
double g_general_constant(int m);
/// C_m (n+1)^{(m-1)/2 + ell}.
double rhs_g_general(int n, int m, int ell);
/// 2^{m+1} (m+2)!/sqrt(n+1) (n/(n-t))^m; the last factor is 1 when m = 0.
double rhs_g_small(int n, int m, double t);
/// 4 (3/ln(1/c))^m (m+2)! (n+1)^ell.
double rhs_g_large(int n, int m, int ell, double t, double c = 0.9);

struct ExpDecayVariants {
  /// exp(sqrt(n) - t/(1+sqrt(n))) / sqrt(n+1).
  double asymptotic = 0.0;
  /// exp(sqrt(n) (1 - t/(n+sqrt(n)))) / sqrt(n+1); undefined for n = 0.
  std::optional<double> sharp;
};
ExpDecayVariants rhs_g_expdecay(int n, double t);

/// Auxiliary bounds for t^{m+ell} g_n^(m) on the bands around the peak.
enum class BandVariant {
  kBelowPeak,         // e^m (m+2)! n^{(m-1)/2},               0 <= t <= n - sqrt(n)
  kBelowPeakRefined,  // 2^{m+1} (m+2)!/sqrt(n+1) (n/(n-t))^m, 0 <= t <= n - m sqrt(n)
  kGaussian,          // exp(-(n-t)^2/(2n))/sqrt(n+1) for g_n, 0 <= t <= n - sqrt(n)
  kAbovePeak,         // (4e)^{m+3} (m+2)! n^{(m-1)/2+ell},     t >= n + sqrt(n)
  kAbovePeakLarge,    // (3/ln(1/c))^m (m+2)! (4n)^ell,         t >= n + m(sqrt(n)+2), m >= 2 ln n
  kSharpDecay,        // exp(sqrt(n)(1 - t/(n+sqrt(n))))/sqrt(n+1), t >= n + sqrt(n)
};
bool region_g_band(BandVariant v, int n, int m, double t);
double rhs_g_band(BandVariant v, int n, int m, double t, int ell = 0, double c = 0.9);

/// Rounding error bound for a right-hand side value computed by the
/// functions above: a few ulps plus the error from exponentiating.
double rhs_rounding_error(double rhs);

// ---------------------------------------------------------------------------
// Catalog.

enum class LhsFamily {
  kOmega,  // |omega~_n^(m)(x)|
  kG,      // |t^{m+ell} g_n^(m)(t)|
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Validity domain of a bound with its free constants.
struct Region {
  std::string id;
  std::string description;
  std::vector<std::pair<std::string, double>> constants;
  std::function<bool(const BoundPoint&, const BoundConstants&)> contains;
};

struct BoundSpec {
  std::string id;
  std::string formula;
  LhsFamily lhs = LhsFamily::kG;
  Region region;
  BoundConstants defaults;
  bool gamma_free = false;
  /// The region depends on reading "log" as natural log.
  bool log_base_sensitive = false;
  std::vector<int> m_values_allowed;  // empty: any m
  std::vector<int> ell_values{0};
  std::function<double(const BoundPoint&, const BoundConstants&)> rhs;
  /// Finite x/t interval to sample for given (n, m) at the given constants;
  /// nullopt when the region has no points for that (n, m).
  std::function<std::optional<Interval>(int n, int m, const BoundConstants&)> interval;
};

/// Smallest x or t sampled by the certification grids.
inline constexpr double kGridFloor = 1e-3;

const std::vector<BoundSpec>& bound_catalog();
/// Throws std::out_of_range for an unknown id.
const BoundSpec& find_bound(const std::string& id);
std::vector<std::string> bound_ids();

bool region_membership(const BoundSpec& spec, const BoundPoint& p, const BoundConstants& k);

/// Catalog as JSON text: id, formula, region, constants, flags.
std::string bound_catalog_json();

}  // namespace omegak
