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

// Globally adaptive Gauss-Kronrod (7, 15) integration over a finite interval
// with error-carrying integrand samples.

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "omegak/errors.hpp"

namespace omegak {

template <class Real>
struct QuadSample {
  Real value = 0;
  Real abs_err = 0;
  bool reliable = true;
};

template <class Real>
struct QuadOptions {
  Real abs_tol = Real(1e-12);
  Real rel_tol = Real(1e-10);
  /// Multiply abs_tol by min(1, integral of |f|) so that tiny integrals are
  /// still resolved to relative accuracy.
  bool scale_abs_by_l1 = true;
  int max_subdivisions = 2000;
};

template <class Real>
struct QuadOutcome {
  Real value = 0;
  /// Discretization error plus propagated sample error.
  Real abs_err = 0;
  Real sample_err = 0;
  Real l1 = 0;
  Real target = 0;
  int evaluations = 0;
  int panels = 0;
  int unreliable_samples = 0;
  /// True when the error estimate meets the target.
  bool converged = true;
};

namespace detail {

template <class Real>
struct Panel {
  Real a, b;
  Real value, err, l1, sample_err;
  bool splittable;
  bool operator<(const Panel& o) const { return err < o.err; }
};

template <class Real, class F>
Panel<Real> gk15_panel(F& f, Real a, Real b, QuadOutcome<Real>& out) {
  using boost::math::quadrature::gauss;
  using boost::math::quadrature::gauss_kronrod;
  using std::abs;
  static const auto& xk = gauss_kronrod<Real, 15>::abscissa();
  static const auto& wk = gauss_kronrod<Real, 15>::weights();
  static const auto& wg = gauss<Real, 7>::weights();
  const Real c = (a + b) / 2;
  const Real h = (b - a) / 2;
  Real kron = 0, gsum = 0, l1 = 0, serr = 0;
  auto take = [&](const QuadSample<Real>& s, Real weight_k, Real weight_g) {
    kron += weight_k * s.value;
    gsum += weight_g * s.value;
    l1 += weight_k * abs(s.value);
    serr += weight_k * s.abs_err;
    if (!s.reliable) ++out.unreliable_samples;
  };
  take(f(c), wk[0], wg[0]);
  out.evaluations += 1;
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const Real dx = h * xk[i];
    const Real g_weight = (i % 2 == 0) ? wg[i / 2] : Real(0);
    take(f(c - dx), wk[i], g_weight);
    take(f(c + dx), wk[i], g_weight);
    out.evaluations += 2;
  }
  Panel<Real> p;
  p.a = a;
  p.b = b;
  p.value = kron * h;
  p.l1 = l1 * abs(h);
  p.sample_err = serr * abs(h);
  const Real roundoff = 50 * std::numeric_limits<Real>::epsilon() * p.l1;
  const Real diff = abs((kron - gsum) * h);
  p.err = std::max(diff, roundoff);
  // Panels whose error is already at the roundoff floor, or too narrow to
  // bisect, are not refined further.
  p.splittable = diff > roundoff && c > a && c < b;
  return p;
}

}  // namespace detail

/// Integrates f over [breaks.front(), breaks.back()], with the listed points
/// as initial panel boundaries.  f(x) returns QuadSample<Real>.  Throws
/// QuadratureFailure when the subdivision limit is reached before the target.
template <class Real, class F>
QuadOutcome<Real> integrate_adaptive(F f, std::vector<Real> breaks, const QuadOptions<Real>& opt) {
  QuadOutcome<Real> out;
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  if (breaks.size() < 2) return out;

  std::priority_queue<detail::Panel<Real>> active;
  std::vector<detail::Panel<Real>> done;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    auto p = detail::gk15_panel<Real>(f, breaks[i], breaks[i + 1], out);
    if (p.splittable)
      active.push(p);
    else
      done.push_back(p);
  }
  auto totals = [&](Real* value, Real* err, Real* l1, Real* serr) {
    *value = *err = *l1 = *serr = 0;
    auto acc = [&](const detail::Panel<Real>& p) {
      *value += p.value;
      *err += p.err;
      *l1 += p.l1;
      *serr += p.sample_err;
    };
    for (const auto& p : done) acc(p);
    auto copy = active;
    while (!copy.empty()) {
      acc(copy.top());
      copy.pop();
    }
  };
  auto target_of = [&](Real value, Real l1) {
    using std::abs;
    const Real abs_part = opt.scale_abs_by_l1 ? opt.abs_tol * std::min(Real(1), l1) : opt.abs_tol;
    return std::max(abs_part, opt.rel_tol * abs(value));
  };

  Real value, err, l1, serr;
  totals(&value, &err, &l1, &serr);
  int subdivisions = 0;
  // Running totals are updated incrementally and refreshed periodically.
  while (err > target_of(value, l1) && !active.empty()) {
    if (subdivisions >= opt.max_subdivisions) {
      totals(&value, &err, &l1, &serr);
      if (err <= target_of(value, l1)) break;
      throw QuadratureFailure("adaptive quadrature: subdivision limit reached",
                              static_cast<double>(value), static_cast<double>(err + serr));
    }
    const auto worst = active.top();
    active.pop();
    const Real mid = (worst.a + worst.b) / 2;
    auto left = detail::gk15_panel<Real>(f, worst.a, mid, out);
    auto right = detail::gk15_panel<Real>(f, mid, worst.b, out);
    ++subdivisions;
    value += left.value + right.value - worst.value;
    err += left.err + right.err - worst.err;
    l1 += left.l1 + right.l1 - worst.l1;
    serr += left.sample_err + right.sample_err - worst.sample_err;
    for (auto* p : {&left, &right}) {
      if (p->splittable)
        active.push(*p);
      else
        done.push_back(*p);
    }
    if (subdivisions % 64 == 0) totals(&value, &err, &l1, &serr);
  }
  totals(&value, &err, &l1, &serr);
  out.value = value;
  out.sample_err = serr;
  out.abs_err = err + serr;
  out.l1 = l1;
  out.target = target_of(value, l1);
  out.panels = static_cast<int>(done.size() + active.size());
  out.converged = err <= out.target;
  return out;
}

}  // namespace omegak
