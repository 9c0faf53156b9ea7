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

#include "omegak/certify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <tuple>

#include "omegak/errors.hpp"
#include "omegak/exp_core.hpp"
#include "omegak/parallel.hpp"

namespace omegak {
namespace {

struct Evaluated {
  BoundPoint point;
  LhsValue lhs;
};

bool point_less(const BoundPoint& a, const BoundPoint& b) {
  return std::tie(a.n, a.m, a.ell, a.xt) < std::tie(b.n, b.m, b.ell, b.xt);
}

bool point_equal(const BoundPoint& a, const BoundPoint& b) {
  return a.n == b.n && a.m == b.m && a.ell == b.ell && a.xt == b.xt;
}

BoundConstants constants_for(const BoundSpec& spec, const CertifyOptions& opt) {
  auto it = opt.constants.find(spec.id);
  return it == opt.constants.end() ? spec.defaults : it->second;
}

std::vector<Evaluated> evaluate_all(const BoundSpec& spec, const std::vector<BoundPoint>& points,
                                    const SweepOptions& opt) {
  std::vector<Evaluated> out(points.size());
  parallel_for(
      points.size(),
      [&](std::size_t i) {
        out[i].point = points[i];
        out[i].lhs = evaluate_lhs(spec, points[i], opt.quadrature);
      },
      opt.threads);
  return out;
}

// Domain used for gamma fitting: gamma = 1 gives the largest region.
BoundConstants superset_constants(const BoundSpec& spec, const BoundConstants& k) {
  BoundConstants s = k;
  if (spec.gamma_free) s.gamma = 1.0;
  return s;
}

double relative_margin(const BoundCheckRecord& r) {
  return r.rhs > 0.0 ? r.margin / r.rhs : r.margin;
}

// All reliable points inside the region at k pass?  Also reports the worst
// failing record.
bool all_reliable_pass(const BoundSpec& spec, const std::vector<Evaluated>& pts, const BoundConstants& k,
                       std::optional<BoundCheckRecord>* worst_fail) {
  bool ok = true;
  for (const auto& e : pts) {
    if (!e.lhs.reliable || !e.lhs.error.empty()) continue;
    if (!region_membership(spec, e.point, k)) continue;
    const BoundCheckRecord r = judge(spec, e.point, e.lhs, k);
    if (!r.pass) {
      ok = false;
      if (worst_fail && (!*worst_fail || relative_margin(r) < relative_margin(**worst_fail))) *worst_fail = r;
    }
  }
  return ok;
}

GammaFit fit_on(const BoundSpec& spec, const std::vector<Evaluated>& pts, const BoundConstants& base) {
  GammaFit fit;
  fit.applicable = spec.gamma_free;
  if (!spec.gamma_free) return fit;
  BoundConstants k = base;
  for (const auto& e : pts) {
    if (!region_membership(spec, e.point, superset_constants(spec, base))) continue;
    if (e.lhs.reliable && e.lhs.error.empty())
      ++fit.reliable_points;
    else
      ++fit.excluded_unreliable;
  }
  auto passes = [&](double g) {
    k.gamma = g;
    return all_reliable_pass(spec, pts, k, nullptr);
  };
  if (passes(1.0)) {
    fit.success = true;
    fit.gamma = 1.0;
    return fit;
  }
  k.gamma = kGammaMax;
  std::optional<BoundCheckRecord> worst;
  if (!all_reliable_pass(spec, pts, k, &worst)) {
    fit.success = false;
    fit.worst_offender = worst;
    return fit;
  }
  double lo = 1.0, hi = kGammaMax;
  while (hi - lo > 1e-4) {
    const double mid = 0.5 * (lo + hi);
    if (passes(mid))
      hi = mid;
    else
      lo = mid;
  }
  double g = std::ceil(hi * 1000.0 - 1e-9) / 1000.0;
  while (!passes(g) && g < kGammaMax) g += 0.001;
  fit.success = true;
  fit.gamma = g;
  return fit;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void canonical(const GridSpec& g, std::ostringstream& os) {
  os << "n:";
  for (int n : g.n_values) os << n << ',';
  os << ";m:";
  for (int m : g.m_values) os << m << ',';
  os << ";k:" << g.points_per_interval << ";pts:";
  for (const auto& p : g.explicit_points) os << p.n << '/' << p.m << '/' << p.ell << '/' << fmt(p.xt) << ',';
  for (const auto& [id, sub] : g.overrides) {
    os << ";override:" << id << '{';
    canonical(sub, os);
    os << '}';
  }
}

}  // namespace

GridSpec GridSpec::default_grid() {
  GridSpec g;
  g.n_values = {0, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
  for (int m = 0; m <= 8; ++m) g.m_values.push_back(m);
  g.points_per_interval = 40;
  return g;
}

GridSpec GridSpec::dense_grid() {
  GridSpec g;
  for (int n = 0; n <= 100; ++n) g.n_values.push_back(n);
  for (int m = 0; m <= 10; ++m) g.m_values.push_back(m);
  g.points_per_interval = 80;
  return g;
}

void GridSpec::validate() const {
  if (explicit_points.empty()) {
    if (n_values.empty() || m_values.empty()) throw DomainError("grid needs nonempty n and m lists");
    if (points_per_interval < 1) throw DomainError("grid needs at least one point per interval");
    for (int n : n_values) check_index({n, 0});
    for (int m : m_values) check_index({0, m});
  }
  for (const auto& p : explicit_points) {
    check_index({p.n, p.m});
    if (!(p.xt > 0.0) || !std::isfinite(p.xt)) throw DomainError("grid x/t values must be positive");
  }
  for (const auto& [id, sub] : overrides) sub.validate();
}

std::string GridSpec::hash() const {
  std::ostringstream os;
  canonical(*this, os);
  const std::string text = os.str();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const GridSpec& GridSpec::for_bound(const std::string& id) const {
  auto it = overrides.find(id);
  return it == overrides.end() ? *this : it->second;
}

std::vector<BoundPoint> grid_points(const BoundSpec& spec, const GridSpec& grid, const BoundConstants& k) {
  const GridSpec& g = grid.for_bound(spec.id);
  std::vector<BoundPoint> pts;
  if (!g.explicit_points.empty()) {
    for (const auto& p : g.explicit_points)
      if (region_membership(spec, p, k)) pts.push_back(p);
  } else {
    for (int n : g.n_values) {
      for (int m : g.m_values) {
        if (!spec.m_values_allowed.empty() &&
            std::find(spec.m_values_allowed.begin(), spec.m_values_allowed.end(), m) == spec.m_values_allowed.end())
          continue;
        const auto iv = spec.interval(n, m, k);
        if (!iv) continue;
        for (int ell : spec.ell_values) {
          const int count = iv->hi > iv->lo ? g.points_per_interval : 1;
          const double llo = std::log(iv->lo), lhi = std::log(iv->hi);
          for (int i = 0; i < count; ++i) {
            double x;
            if (i == 0)
              x = iv->lo;
            else if (i == count - 1)
              x = iv->hi;
            else
              x = std::exp(llo + (lhi - llo) * i / (count - 1));
            const BoundPoint p{n, m, ell, x};
            if (region_membership(spec, p, k)) pts.push_back(p);
          }
        }
      }
    }
  }
  std::sort(pts.begin(), pts.end(), point_less);
  pts.erase(std::unique(pts.begin(), pts.end(), point_equal), pts.end());
  return pts;
}

LhsValue evaluate_lhs(const BoundSpec& spec, const BoundPoint& p, const QuadratureConfig& cfg) {
  LhsValue out;
  try {
    EvalResult r;
    if (spec.lhs == LhsFamily::kOmega) {
      const OmegaQuery q{{p.n, p.m}, p.xt};
      r = p.m == 0 ? omega_tilde(q, cfg) : omega_tilde_deriv_auto(q, cfg);
    } else {
      r = weighted_gn_deriv({p.n, p.m}, p.m + p.ell, p.xt, DerivRoute::kBest);
    }
    out.value = std::abs(r.value);
    out.abs_err = r.abs_err;
    out.reliable = r.reliable;
  } catch (const QuadratureFailure& e) {
    out.value = std::abs(e.best_estimate());
    out.abs_err = e.best_error();
    out.reliable = false;
    out.error = e.what();
  } catch (const Error& e) {
    out.reliable = false;
    out.error = e.what();
  }
  return out;
}

BoundCheckRecord judge(const BoundSpec& spec, const BoundPoint& p, const LhsValue& lhs, const BoundConstants& k) {
  BoundCheckRecord r;
  r.bound_id = spec.id;
  r.point = p;
  r.lhs = lhs.value;
  r.lhs_err = lhs.abs_err;
  r.error = lhs.error;
  r.rhs = spec.rhs(p, k);
  r.rhs_err = rhs_rounding_error(r.rhs);
  r.margin = r.rhs - r.lhs;
  r.reliable = lhs.reliable && lhs.error.empty();
  r.pass = lhs.error.empty() && std::isfinite(r.lhs + r.lhs_err) && r.lhs + r.lhs_err <= r.rhs + r.rhs_err;
  r.tight = r.pass && r.margin < 10.0 * (r.lhs_err + r.rhs_err);
  return r;
}

std::vector<BoundCheckRecord> sweep(const BoundSpec& spec, const GridSpec& grid, const BoundConstants& k,
                                    const SweepOptions& opt) {
  grid.validate();
  const auto pts = evaluate_all(spec, grid_points(spec, grid, k), opt);
  std::vector<BoundCheckRecord> out;
  out.reserve(pts.size());
  for (const auto& e : pts) out.push_back(judge(spec, e.point, e.lhs, k));
  return out;
}

std::vector<BoundCheckRecord> sweep(const BoundSpec& spec, const GridSpec& grid, const SweepOptions& opt) {
  return sweep(spec, grid, spec.defaults, opt);
}

GammaFit fit_gamma(const BoundSpec& spec, const GridSpec& grid, const SweepOptions& opt) {
  grid.validate();
  if (!spec.gamma_free) return GammaFit{};
  const BoundConstants base = superset_constants(spec, spec.defaults);
  const auto pts = evaluate_all(spec, grid_points(spec, grid, base), opt);
  return fit_on(spec, pts, base);
}

const char* status_name(BoundStatus s) {
  switch (s) {
    case BoundStatus::kPass:
      return "PASS";
    case BoundStatus::kFail:
      return "FAIL";
    case BoundStatus::kInconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

BoundReport certify_bound(const BoundSpec& spec, const GridSpec& grid, const CertifyOptions& opt) {
  grid.validate();
  BoundReport rep;
  rep.bound_id = spec.id;
  BoundConstants k = constants_for(spec, opt);
  const BoundConstants base = opt.fit ? superset_constants(spec, k) : k;
  const auto pts = evaluate_all(spec, grid_points(spec, grid, base), opt.sweep);
  if (opt.fit) {
    rep.fit = fit_on(spec, pts, base);
    if (rep.fit.applicable && rep.fit.success) k.gamma = rep.fit.gamma;
  }
  rep.constants = k;
  for (const auto& e : pts) {
    if (!region_membership(spec, e.point, k)) continue;
    rep.records.push_back(judge(spec, e.point, e.lhs, k));
  }
  int reliable = 0;
  for (const auto& r : rep.records) {
    ++rep.points;
    if (!r.error.empty()) ++rep.errors;
    if (r.reliable) {
      ++reliable;
      if (r.pass)
        ++rep.passed;
      else
        ++rep.failed;
      if (!rep.worst || relative_margin(r) < relative_margin(*rep.worst)) rep.worst = r;
    } else {
      ++rep.unreliable;
      if (!r.pass) ++rep.unreliable_failed;
    }
    if (r.tight) ++rep.tight;
  }
  if (rep.failed > 0 || (rep.fit.applicable && !rep.fit.success && opt.fit))
    rep.status = BoundStatus::kFail;
  else if (reliable == 0)
    rep.status = BoundStatus::kInconclusive;
  else
    rep.status = BoundStatus::kPass;
  return rep;
}

MajorantCheck majorant_property_check(MajorantReading reading, int n_min, int n_max, int m_max, int samples) {
  MajorantCheck c;
  c.reading = reading;
  for (int n = std::max(n_min, 1); n <= n_max; ++n) {
    const double r = std::sqrt(static_cast<double>(n));
    for (int m = 0; m <= m_max; ++m) {
      const double a = majorant_A({n, m}, reading);
      for (int i = 0; i < samples; ++i) {
        const double t = samples == 1 ? n : n - r + 2.0 * r * i / (samples - 1);
        if (!(t > 0.0)) continue;
        const EvalResult g = gn_deriv({n, m}, t, DerivRoute::kBest);
        ++c.samples;
        const double upper = std::abs(g.value) + g.abs_err;
        if (upper > a) ++c.violations;
        const double ratio = upper / a;
        if (ratio > c.worst_ratio) {
          c.worst_ratio = ratio;
          c.worst_n = n;
          c.worst_m = m;
          c.worst_t = t;
        }
      }
    }
  }
  return c;
}

double sampled_weighted_sup(FamilyIndex idx, int ell, double a, double b, int samples) {
  if (!(a > 0.0) || !(b >= a)) throw DomainError("sampled_weighted_sup needs 0 < a <= b");
  double best = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double t = samples == 1 ? a : a + (b - a) * i / (samples - 1);
    best = std::max(best, std::abs(weighted_gn_deriv(idx, idx.m + ell, t).value));
  }
  return best;
}

BoundStatus CertReport::status() const {
  bool inconclusive = bounds.empty();
  for (const auto& b : bounds) {
    if (b.status == BoundStatus::kFail) return BoundStatus::kFail;
    if (b.status == BoundStatus::kInconclusive) inconclusive = true;
  }
  return inconclusive ? BoundStatus::kInconclusive : BoundStatus::kPass;
}

CertReport certify(const std::vector<std::string>& ids, const GridSpec& grid, const CertifyOptions& opt) {
  CertReport rep;
  rep.grid_hash = grid.hash();
  for (const auto& id : ids) rep.bounds.push_back(certify_bound(find_bound(id), grid, opt));
  if (opt.majorant_checks) {
    rep.majorants.push_back(majorant_property_check(MajorantReading::kRowOrder));
    rep.majorants.push_back(majorant_property_check(MajorantReading::kMZeroRow));
  }
  return rep;
}

}  // namespace omegak
