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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "omegak/bounds.hpp"

namespace omegak {
namespace {

// Fitted gamma values rounded up to one decimal; see the certification report.
constexpr double kShippingGammaGeneral = 1.0;
constexpr double kShippingGammaSmallC2 = 1.0;
constexpr double kShippingGammaSmallC4 = 1.0;
constexpr double kShippingGammaLarge = 1.0;

double root(int n) { return std::sqrt(static_cast<double>(n)); }

// Upper end used where the region is unbounded above.
double open_end(int n, int m) { return 2.0 * (n + m * (root(n) + 2.0)) + 40.0; }

std::optional<Interval> make_interval(double lo, double hi) {
  lo = std::max(lo, kGridFloor);
  if (!(hi >= lo)) return std::nullopt;
  return Interval{lo, hi};
}

double just_above(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

BoundSpec omega_small_spec(int C, double gamma) {
  BoundSpec s;
  s.id = "estomegatildenm1sa-C" + std::to_string(C);
  s.formula = "|w~_n^(m)(x)| <= m! (gamma/x)^m (d_{m,0}/sqrt(2x+1) + gamma/sqrt(n+1) (1 + d_{n+m,0} ln((x+1)/x)))";
  s.lhs = LhsFamily::kOmega;
  s.gamma_free = true;
  s.defaults.gamma = gamma;
  s.defaults.C = C;
  s.region.id = "small-argument";
  s.region.description =
      "0 <= m <= sqrt(n)(C-1)/C, 2 floor(m log(n+1)/(4 log 2)) - 2 <= (n-1)/2, "
      "0 < x <= min(n/(2C), (n+1)/(4 gamma)), C = " + std::to_string(C);
  s.region.constants = {{"C", static_cast<double>(C)}, {"gamma", gamma}};
  s.region.contains = [](const BoundPoint& p, const BoundConstants& k) {
    return region_omega_small(p.n, p.m, p.xt, k.gamma, k.C);
  };
  s.rhs = [](const BoundPoint& p, const BoundConstants& k) {
    return rhs_omega_small(p.n, p.m, p.xt, k.gamma, k.C);
  };
  s.interval = [](int n, int m, const BoundConstants& k) -> std::optional<Interval> {
    if (!small_argument_m_range(n, m, k.C) || !small_argument_m_condition(n, m)) return std::nullopt;
    return make_interval(kGridFloor, std::min(n / (2.0 * k.C), (n + 1) / (4.0 * k.gamma)));
  };
  return s;
}

std::vector<BoundSpec> build_catalog() {
  std::vector<BoundSpec> out;

  {
    BoundSpec s;
    s.id = "estomegatildenm1";
    s.formula = "|w~_n^(m)(x)| <= m! (gamma sqrt(n+1)/x)^m (d_{m,0}/sqrt(2x+1) + gamma/sqrt(n+1) (1 + d_{m+n,0} ln((x+1)/x)))";
    s.lhs = LhsFamily::kOmega;
    s.gamma_free = true;
    s.defaults.gamma = kShippingGammaGeneral;
    s.region.id = "all";
    s.region.description = "n, m >= 0, x > 0";
    s.region.constants = {{"gamma", kShippingGammaGeneral}};
    s.region.contains = [](const BoundPoint& p, const BoundConstants&) { return p.xt > 0.0; };
    s.rhs = [](const BoundPoint& p, const BoundConstants& k) {
      return rhs_omega_general(p.n, p.m, p.xt, k.gamma);
    };
    s.interval = [](int n, int m, const BoundConstants&) { return make_interval(kGridFloor, open_end(n, m)); };
    out.push_back(s);
  }
  out.push_back(omega_small_spec(2, kShippingGammaSmallC2));
  out.push_back(omega_small_spec(4, kShippingGammaSmallC4));
  {
    BoundSpec s;
    s.id = "estomegatildenm1la";
    s.formula = "|w~_n^(m)(x)| <= m! (gamma/x)^m";
    s.lhs = LhsFamily::kOmega;
    s.gamma_free = true;
    s.log_base_sensitive = true;
    s.defaults.gamma = kShippingGammaLarge;
    s.region.id = "large-argument";
    s.region.description = "m >= 1 + 2 ln(n+1); x > 0 for n <= 1, x > n + m(sqrt(n)+2) for n >= 2";
    s.region.constants = {{"gamma", kShippingGammaLarge}};
    s.region.contains = [](const BoundPoint& p, const BoundConstants&) {
      return region_omega_large(p.n, p.m, p.xt);
    };
    s.rhs = [](const BoundPoint& p, const BoundConstants& k) {
      return rhs_omega_large(p.n, p.m, p.xt, k.gamma);
    };
    s.interval = [](int n, int m, const BoundConstants&) -> std::optional<Interval> {
      if (m < 1.0 + 2.0 * std::log(n + 1.0)) return std::nullopt;
      const double thr = omega_large_threshold(n, m);
      return make_interval(n <= 1 ? kGridFloor : just_above(thr), 2.0 * thr + 40.0);
    };
    out.push_back(s);
  }
  {
    BoundSpec s;
    s.id = "exponentialdecayomegatilde";
    s.formula = "w~_n(x) <= 3 exp(sqrt(n) - x/(1+sqrt(n))) / sqrt(n+1)";
    s.lhs = LhsFamily::kOmega;
    s.m_values_allowed = {0};
    s.region.id = "decay";
    s.region.description = "m = 0, x >= max(1, n + sqrt(n))";
    s.region.contains = [](const BoundPoint& p, const BoundConstants&) {
      return p.m == 0 && region_omega_expdecay(p.n, p.xt);
    };
    s.rhs = [](const BoundPoint& p, const BoundConstants&) { return rhs_omega_expdecay(p.n, p.xt); };
    s.interval = [](int n, int, const BoundConstants&) {
      const double lo = std::max(1.0, n + root(n));
      return make_interval(lo, lo + 40.0 * (1.0 + root(n)));
    };
    out.push_back(s);
  }
  {
    BoundSpec s;
    s.id = "estgntilde";
    s.formula = "|t^{m+l} g_n^(m)(t)| <= (4e)^{m+3} (m+2)! (n+1)^{(m-1)/2+l}";
    s.ell_values = {0, 1};
    s.region.id = "all";
    s.region.description = "n, m >= 0, l in {0,1}, t >= 0";
    s.region.contains = [](const BoundPoint& p, const BoundConstants&) { return p.xt >= 0.0; };
    s.rhs = [](const BoundPoint& p, const BoundConstants&) { return rhs_g_general(p.n, p.m, p.ell); };
    s.interval = [](int n, int m, const BoundConstants&) { return make_interval(kGridFloor, open_end(n, m)); };
    out.push_back(s);
  }
  {
    BoundSpec s;
    s.id = "estgntildesa";
    s.formula = "|t^m g_n^(m)(t)| <= 2^{m+1} (m+2)!/sqrt(n+1) (n/(n-t))^m";
    s.region.id = "below-peak";
    s.region.description = "0 <= t <= n - m sqrt(n)";
    s.region.contains = [](const BoundPoint& p, const BoundConstants&) {
      return region_g_small(p.n, p.m, p.xt);
    };
    s.rhs = [](const BoundPoint& p, const BoundConstants&) { return rhs_g_small(p.n, p.m, p.xt); };
    s.interval = [](int n, int m, const BoundConstants&) {
      return make_interval(kGridFloor, n - m * root(n));
    };
    out.push_back(s);
  }
  {
    BoundSpec s;
    s.id = "estgntildela";
    s.formula = "|t^{m+l} g_n^(m)(t)| <= 4 (3/ln(1/c))^m (m+2)! (n+1)^l, c = 9/10";
    s.ell_values = {0, 1};
    s.log_base_sensitive = true;
    s.region.id = "above-peak";
    s.region.description = "m >= 2 ln(n+1); t >= 0 for n <= 1, t >= n + m(sqrt(n)+2) for n >= 2";
    s.region.constants = {{"c", 0.9}};
    s.region.contains = [](const BoundPoint& p, const BoundConstants&) {
      return region_g_large(p.n, p.m, p.xt);
    };
    s.rhs = [](const BoundPoint& p, const BoundConstants& k) {
      return rhs_g_large(p.n, p.m, p.ell, p.xt, k.c);
    };
    s.interval = [](int n, int m, const BoundConstants&) -> std::optional<Interval> {
      if (m < 2.0 * std::log(n + 1.0)) return std::nullopt;
      const double thr = g_large_threshold(n, m);
      return make_interval(thr, 2.0 * thr + 40.0);
    };
    out.push_back(s);
  }
  {
    BoundSpec s;
    s.id = "estgnasymptotic";
    s.formula = "g_n(t) <= exp(sqrt(n) - t/(1+sqrt(n))) / sqrt(n+1)";
    s.m_values_allowed = {0};
    s.region.id = "decay";
    s.region.description = "m = 0, t >= n + sqrt(n)";
    s.region.contains = [](const BoundPoint& p, const BoundConstants&) {
      return p.m == 0 && region_g_expdecay(p.n, p.xt);
    };
    s.rhs = [](const BoundPoint& p, const BoundConstants&) { return rhs_g_expdecay(p.n, p.xt).asymptotic; };
    s.interval = [](int n, int, const BoundConstants&) {
      const double lo = std::max(kGridFloor, n + root(n));
      return make_interval(lo, lo + 40.0 * (1.0 + root(n)));
    };
    out.push_back(s);
  }

  struct Band {
    const char* id;
    const char* formula;
    const char* region;
    BandVariant variant;
    bool ell;
    bool m_zero;
  };
  const Band bands[] = {
      {"defDm", "|t^m g_n^(m)(t)| <= e^m (m+2)! n^{(m-1)/2}", "n >= 2, 0 <= t <= n - sqrt(n)",
       BandVariant::kBelowPeak, false, false},
      {"defDmsa", "|t^m g_n^(m)(t)| <= 2^{m+1} (m+2)!/sqrt(n+1) (n/(n-t))^m",
       "n >= 2, 0 <= t <= n - m sqrt(n)", BandVariant::kBelowPeakRefined, false, false},
      {"repgknm2", "g_n(n - d) <= exp(-d^2/(2n)) / sqrt(n+1)", "n >= 2, m = 0, sqrt(n) <= d = n - t <= n",
       BandVariant::kGaussian, false, true},
      {"tmgplus", "|t^{m+l} g_n^(m)(t)| <= (4e)^{m+3} (m+2)! n^{(m-1)/2+l}", "n >= 2, l in {0,1}, t >= n + sqrt(n)",
       BandVariant::kAbovePeak, true, false},
      {"tmgplusla", "|t^{m+l} g_n^(m)(t)| <= (3/ln(1/c))^m (m+2)! (4n)^l, c = 9/10",
       "n >= 2, l in {0,1}, m >= 2 ln n, t >= n + m(sqrt(n)+2)", BandVariant::kAbovePeakLarge, true, false},
      {"expdecay", "g_n(t) <= exp(sqrt(n)(1 - t/(n+sqrt(n)))) / sqrt(n+1)", "n >= 2, m = 0, t >= n + sqrt(n)",
       BandVariant::kSharpDecay, false, true},
  };
  for (const Band& b : bands) {
    BoundSpec s;
    s.id = b.id;
    s.formula = b.formula;
    s.region.id = b.id;
    s.region.description = b.region;
    if (b.ell) s.ell_values = {0, 1};
    if (b.m_zero) s.m_values_allowed = {0};
    s.log_base_sensitive = b.variant == BandVariant::kAbovePeakLarge;
    const BandVariant v = b.variant;
    if (v == BandVariant::kAbovePeakLarge) s.region.constants = {{"c", 0.9}};
    s.region.contains = [v](const BoundPoint& p, const BoundConstants&) {
      return region_g_band(v, p.n, p.m, p.xt);
    };
    s.rhs = [v](const BoundPoint& p, const BoundConstants& k) {
      return rhs_g_band(v, p.n, p.m, p.xt, p.ell, k.c);
    };
    s.interval = [v](int n, int m, const BoundConstants&) -> std::optional<Interval> {
      if (n < 2) return std::nullopt;
      const double r = root(n);
      switch (v) {
        case BandVariant::kBelowPeak:
        case BandVariant::kGaussian:
          return make_interval(kGridFloor, n - r);
        case BandVariant::kBelowPeakRefined:
          return make_interval(kGridFloor, n - m * r);
        case BandVariant::kAbovePeak:
          return make_interval(n + r, open_end(n, m));
        case BandVariant::kAbovePeakLarge: {
          if (m < 2.0 * std::log(static_cast<double>(n))) return std::nullopt;
          const double thr = n + m * (r + 2.0);
          return make_interval(thr, 2.0 * thr + 40.0);
        }
        case BandVariant::kSharpDecay:
          return make_interval(n + r, n + r + 40.0 * (1.0 + r));
      }
      return std::nullopt;
    };
    out.push_back(s);
  }
  return out;
}

}  // namespace

const std::vector<BoundSpec>& bound_catalog() {
  static const std::vector<BoundSpec> catalog = build_catalog();
  return catalog;
}

const BoundSpec& find_bound(const std::string& id) {
  for (const auto& s : bound_catalog())
    if (s.id == id) return s;
  throw std::out_of_range("unknown bound id: " + id);
}

std::vector<std::string> bound_ids() {
  std::vector<std::string> ids;
  for (const auto& s : bound_catalog()) ids.push_back(s.id);
  return ids;
}

bool region_membership(const BoundSpec& spec, const BoundPoint& p, const BoundConstants& k) {
  if (!spec.m_values_allowed.empty() &&
      std::find(spec.m_values_allowed.begin(), spec.m_values_allowed.end(), p.m) == spec.m_values_allowed.end())
    return false;
  if (std::find(spec.ell_values.begin(), spec.ell_values.end(), p.ell) == spec.ell_values.end()) return false;
  return spec.region.contains(p, k);
}

std::string bound_catalog_json() {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& s : bound_catalog()) {
    nlohmann::ordered_json j;
    j["id"] = s.id;
    j["lhs"] = s.lhs == LhsFamily::kOmega ? "omega_tilde" : "weighted_g";
    j["formula"] = s.formula;
    j["region"] = s.region.description;
    nlohmann::ordered_json consts = nlohmann::ordered_json::object();
    for (const auto& [name, value] : s.region.constants) consts[name] = value;
    j["constants"] = consts;
    j["gamma_free"] = s.gamma_free;
    j["log_base_sensitive"] = s.log_base_sensitive;
    j["ell_values"] = s.ell_values;
    arr.push_back(j);
  }
  return arr.dump(2);
}

}  // namespace omegak
