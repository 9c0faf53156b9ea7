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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omegak/bessel_eval.hpp"
#include "omegak/bounds.hpp"
#include "omegak/majorants.hpp"

namespace omegak {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kCertSchema = "cert-v1";

/// Lists of n and m plus the number of log-spaced x/t samples per admissible
/// interval.  Explicit points, when given, replace the generated ones.
struct GridSpec {
  std::vector<int> n_values;
  std::vector<int> m_values;
  int points_per_interval = 40;
  std::vector<BoundPoint> explicit_points;
  /// Per-bound replacement grids keyed by bound id.
  std::map<std::string, GridSpec> overrides;

  /// n in {0,1,2,3,5,8,13,21,34,55,89}, m in 0..8, 40 points per interval.
  static GridSpec default_grid();
  /// Every n up to 100 and m up to 10, 80 points per interval.
  static GridSpec dense_grid();

  /// Throws DomainError when empty lists, caps or nonpositive x/t are found.
  void validate() const;
  /// FNV-1a hash of the canonical text form, as 16 hex digits.
  std::string hash() const;
  const GridSpec& for_bound(const std::string& id) const;
};

struct BoundCheckRecord {
  std::string bound_id;
  BoundPoint point;
  double lhs = 0.0;
  double lhs_err = 0.0;
  double rhs = 0.0;
  double rhs_err = 0.0;
  double margin = 0.0;  // rhs - lhs
  bool pass = false;
  bool reliable = false;
  /// margin < 10 (lhs_err + rhs_err): passes, but only just.
  bool tight = false;
  /// Non-empty when the left-hand side could not be evaluated.
  std::string error;
};

/// Left-hand side of a bound at a point, before any constant enters.
struct LhsValue {
  double value = 0.0;
  double abs_err = 0.0;
  bool reliable = false;
  std::string error;
};

struct SweepOptions {
  QuadratureConfig quadrature;
  int threads = 0;  // 0: default_thread_count()
};

/// Region points of `spec` on `grid` at constants `k`, sorted by (n, m, ell, x/t).
std::vector<BoundPoint> grid_points(const BoundSpec& spec, const GridSpec& grid, const BoundConstants& k);

LhsValue evaluate_lhs(const BoundSpec& spec, const BoundPoint& p, const QuadratureConfig& cfg = {});

/// Compares an evaluated left-hand side with the right-hand side at `k`.
/// pass means lhs + lhs_err <= rhs + rhs_err, where rhs_err only covers the
/// rounding of the closed form.
BoundCheckRecord judge(const BoundSpec& spec, const BoundPoint& p, const LhsValue& lhs, const BoundConstants& k);

/// Evaluates every region point; failures at single points are recorded and
/// the sweep continues.
std::vector<BoundCheckRecord> sweep(const BoundSpec& spec, const GridSpec& grid, const BoundConstants& k,
                                    const SweepOptions& opt = {});
std::vector<BoundCheckRecord> sweep(const BoundSpec& spec, const GridSpec& grid, const SweepOptions& opt = {});

struct GammaFit {
  bool applicable = false;  // false for bounds without a free gamma
  bool success = false;
  double gamma = 0.0;       // smallest admissible gamma, 3 decimals, rounded up
  int reliable_points = 0;
  int excluded_unreliable = 0;
  std::optional<BoundCheckRecord> worst_offender;  // set when no gamma <= 1024 works
};

inline constexpr double kGammaMax = 1024.0;

/// Bisection over gamma in [1, 1024] for the smallest gamma under which every
/// reliable region point passes.  Region points are recomputed per trial, so
/// gamma-dependent domains shrink as gamma grows.
GammaFit fit_gamma(const BoundSpec& spec, const GridSpec& grid, const SweepOptions& opt = {});

enum class BoundStatus { kPass, kFail, kInconclusive };
const char* status_name(BoundStatus s);

struct BoundReport {
  std::string bound_id;
  BoundStatus status = BoundStatus::kInconclusive;
  BoundConstants constants;  // constants the records were judged with
  GammaFit fit;
  int points = 0;
  int passed = 0;
  int failed = 0;
  int unreliable = 0;
  int unreliable_failed = 0;
  int tight = 0;
  int errors = 0;
  std::optional<BoundCheckRecord> worst;  // smallest relative margin among reliable points
  std::vector<BoundCheckRecord> records;
};

/// Summary of |g_n^(m)(t)| <= A_n^(m) on the band |t - n| <= sqrt(n).
struct MajorantCheck {
  MajorantReading reading = MajorantReading::kRowOrder;
  int samples = 0;
  int violations = 0;
  double worst_ratio = 0.0;  // max |g_n^(m)| / A_n^(m)
  int worst_n = 0;
  int worst_m = 0;
  double worst_t = 0.0;
};
MajorantCheck majorant_property_check(MajorantReading reading, int n_min = 2, int n_max = 100, int m_max = 12,
                                      int samples = 200);

/// sup over [a, b] of |t^{m+ell} g_n^(m)(t)| estimated on `samples` points.
double sampled_weighted_sup(FamilyIndex idx, int ell, double a, double b, int samples = 200);

struct CertReport {
  std::string schema = kCertSchema;
  std::string tool_version = kToolVersion;
  std::string grid_hash;
  std::vector<BoundReport> bounds;
  std::vector<MajorantCheck> majorants;
  /// Overall status: PASS only when every bound passes.
  BoundStatus status() const;
};

struct CertifyOptions {
  SweepOptions sweep;
  bool fit = true;
  bool majorant_checks = true;
  /// Constant overrides keyed by bound id; defaults from the catalog otherwise.
  std::map<std::string, BoundConstants> constants;
};

BoundReport certify_bound(const BoundSpec& spec, const GridSpec& grid, const CertifyOptions& opt = {});
CertReport certify(const std::vector<std::string>& bound_ids, const GridSpec& grid, const CertifyOptions& opt = {});

/// Serialized forms.  CSV columns: bound_id, n, m, ell, xt, lhs, lhs_err, rhs,
/// margin, pass, reliable, tight.
std::string report_json(const CertReport& report);
std::string report_csv(const CertReport& report);

}  // namespace omegak
