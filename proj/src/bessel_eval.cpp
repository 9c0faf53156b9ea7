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

#include "omegak/bessel_eval.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "omegak/bessel_k.hpp"
#include "omegak/compensated.hpp"
#include "omegak/errors.hpp"
#include "omegak/quadrature.hpp"

namespace omegak {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr long double kEpsLd = std::numeric_limits<long double>::epsilon();

void check_x(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError("argument x must be finite and positive, got " + std::to_string(x));
}

// Describes an integral over y in [0, inf) whose integrand, written in terms
// of the original variable T(y), has a known tail bound beyond any T >= t_min.
struct HalfLine {
  std::function<QuadSample<double>(double)> sample;
  std::function<double(double)> y_of_t;
  std::function<double(double)> log_tail;  // log of the bound on the tail beyond T
  std::vector<double> t_breaks;             // interior break points, in T
  double t_start = 0.0;                     // T at y = 0
  double t_min = 0.0;                       // tail bound valid for T >= t_min
  double t_center = 0.0;                    // bulk of the integrand sits near here
};

EvalResult integrate_half_line(const HalfLine& h, const QuadratureConfig& cfg) {
  cfg.validate();
  const double t_a = std::max(h.t_min, h.t_center + 8.0 * std::sqrt(h.t_center) + 20.0);
  double y_a = h.y_of_t(t_a);
  if (cfg.tail_rule == TailRule::kFixed) y_a = cfg.fixed_u_max;

  std::vector<double> breaks{0.0, y_a};
  for (double t : h.t_breaks)
    if (t > h.t_start) {
      const double y = h.y_of_t(t);
      if (y > 0.0 && y < y_a) breaks.push_back(y);
    }

  QuadOptions<double> opt;
  opt.abs_tol = 0.5 * cfg.abs_tol;
  opt.rel_tol = 0.5 * cfg.rel_tol;
  opt.max_subdivisions = cfg.max_subdivisions;
  const auto first = integrate_adaptive<double>(h.sample, breaks, opt);

  double value = first.value;
  double err = first.abs_err;
  double l1 = first.l1;

  if (cfg.tail_rule == TailRule::kDecayBound) {
    const double target = std::max(cfg.abs_tol * std::min(1.0, l1), cfg.rel_tol * std::abs(value));
    const double log_goal = target > 0.0 ? std::log(1e-3 * target) : -std::numeric_limits<double>::infinity();
    double t_b = t_a;
    int steps = 0;
    while (h.log_tail(t_b) > log_goal && steps < 400) {
      t_b += std::max(t_b - h.t_center, 1.0);
      ++steps;
    }
    const double tail = std::exp(h.log_tail(t_b));
    if (t_b > t_a) {
      QuadOptions<double> opt2;
      opt2.abs_tol = std::max(0.4 * target, std::numeric_limits<double>::denorm_min());
      opt2.rel_tol = 0.0;
      opt2.scale_abs_by_l1 = false;
      opt2.max_subdivisions = cfg.max_subdivisions;
      const auto second = integrate_adaptive<double>(h.sample, {y_a, h.y_of_t(t_b)}, opt2);
      value += second.value;
      err += second.abs_err;
      l1 += second.l1;
    }
    err += tail;
  }

  const double cancellation = cancellation_ratio(l1, value);
  EvalResult r = EvalResult::make(value, err, cancellation, cfg.cancellation_cap);
  // Panels stuck at the roundoff floor leave the error above target; the
  // estimate stays honest and reliability follows the cancellation ratio.
  return r;
}

std::vector<double> peak_breaks(int n) {
  const double sn = std::sqrt(static_cast<double>(n));
  std::vector<double> out;
  for (double k : {-4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0}) {
    const double t = n + k * sn;
    if (t > 0.0) out.push_back(t);
  }
  return out;
}

// Tail bound on the integral over u > U of cosh^m(u) |g_n^(m)(x cosh u)|
// where T = x cosh U >= N + sqrt(N), N = n + m:
//   2^m (N!/n!) x^{-m} g_N(T) / (beta sqrt(T^2 - x^2)),  beta = 1 - N/T.
double log_tail_cosh(int n, int m, double x, double t) {
  const int big_n = n + m;
  const double beta = 1.0 - big_n / t;
  return m * std::log(2.0) + log_factorial(big_n) - log_factorial(n) - m * std::log(x) +
         gn_log(big_n, t) - std::log(beta) - 0.5 * std::log((t - x) * (t + x));
}

HalfLine cosh_form(int n, int m, double x, std::function<QuadSample<double>(double)> sample) {
  HalfLine h;
  h.sample = std::move(sample);
  h.y_of_t = [x](double t) { return std::acosh(t / x); };
  h.log_tail = [n, m, x](double t) { return log_tail_cosh(n, m, x, t); };
  h.t_breaks = peak_breaks(n);
  h.t_start = x;
  const int big_n = n + m;
  h.t_min = std::max(big_n + std::sqrt(static_cast<double>(big_n)), 1.5 * x);
  h.t_center = std::max(static_cast<double>(n), x);
  return h;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
    throw DomainError("quadrature tolerances must be positive");
  if (max_subdivisions <= 0) throw DomainError("max_subdivisions must be positive");
  if (tail_rule == TailRule::kFixed && !(fixed_u_max > 0.0))
    throw DomainError("fixed truncation needs fixed_u_max > 0");
  if (!(cancellation_cap >= 1.0)) throw DomainError("cancellation cap must be >= 1");
}

EvalResult omega_tilde(const OmegaQuery& q, const QuadratureConfig& cfg) {
  check_index(q.idx);
  check_x(q.x);
  if (q.idx.m != 0) throw DomainError("omega_tilde evaluates m = 0 only; use omega_tilde_deriv");
  const int n = q.idx.n;
  const double x = q.x;
  auto sample = [n, x](double u) {
    const double t = x * std::cosh(u);
    const EvalResult g = gn_value(n, t);
    QuadSample<double> s;
    s.value = g.value;
    s.abs_err = g.abs_err + 2.0 * kEps * (std::abs(n - t) + 1.0) * std::abs(g.value);
    return s;
  };
  return integrate_half_line(cosh_form(n, 0, x, sample), cfg);
}

EvalResult omega_tilde_deriv(const OmegaQuery& q, const QuadratureConfig& cfg) {
  check_index(q.idx);
  check_x(q.x);
  const int n = q.idx.n;
  const int m = q.idx.m;
  const double x = q.x;
  const double x_scale = std::pow(x, -m);
  auto sample = [n, m, x, x_scale](double u) {
    const double t = x * std::cosh(u);
    const EvalResult w = weighted_gn_deriv({n, m}, m, t, DerivRoute::kBest);
    QuadSample<double> s;
    s.value = w.value * x_scale;
    s.abs_err = w.abs_err * x_scale +
                std::abs(s.value) * kEps * (2.0 * std::abs(n - t) + 2.0 * m + 4.0);
    s.reliable = w.reliable;
    return s;
  };
  return integrate_half_line(cosh_form(n, m, x, sample), cfg);
}

EvalResult omega_tilde_sform(int n, double x, const QuadratureConfig& cfg) {
  check_index({n, 0});
  check_x(x);
  HalfLine h;
  h.sample = [n, x](double v) {
    const double t = x * (1.0 + v * v);
    const EvalResult g = gn_value(n, t);
    const double w = 2.0 / std::sqrt(v * v + 2.0);
    QuadSample<double> s;
    s.value = w * g.value;
    s.abs_err = w * g.abs_err + 4.0 * kEps * (std::abs(n - t) + 2.0) * std::abs(s.value);
    return s;
  };
  h.y_of_t = [x](double t) { return std::sqrt(std::max(0.0, t / x - 1.0)); };
  // Beyond v = V with T = x (1 + V^2): tail <= g_n(T) / (sqrt(2) beta x V).
  h.log_tail = [n, x](double t) {
    const double beta = 1.0 - n / t;
    const double v = std::sqrt(t / x - 1.0);
    return gn_log(n, t) - std::log(std::sqrt(2.0) * beta * x * v);
  };
  h.t_breaks = peak_breaks(n);
  h.t_start = x;
  h.t_min = std::max(n + std::sqrt(static_cast<double>(n)), 1.5 * x);
  h.t_center = std::max(static_cast<double>(n), x);
  return integrate_half_line(h, cfg);
}

EvalResult gn_integral(int n, const QuadratureConfig& cfg) {
  check_index({n, 0});
  HalfLine h;
  h.sample = [n](double t) {
    QuadSample<double> s;
    if (t <= 0.0) {
      s.value = n == 0 ? 1.0 : 0.0;
      return s;
    }
    const EvalResult g = gn_value(n, t);
    s.value = g.value;
    s.abs_err = g.abs_err;
    return s;
  };
  h.y_of_t = [](double t) { return t; };
  // g_n(t) <= g_n(T) e^{-beta (t - T)} for t >= T > n, beta = 1 - n/T.
  h.log_tail = [n](double t) { return gn_log(n, t) - std::log(1.0 - n / t); };
  h.t_breaks = peak_breaks(n);
  h.t_start = 0.0;
  h.t_min = n + std::sqrt(static_cast<double>(n)) + 1.0;
  h.t_center = n;
  return integrate_half_line(h, cfg);
}

EvalResult omega_tilde_oracle(const OmegaQuery& q) {
  check_index(q.idx);
  check_x(q.x);
  if (q.idx.m != 0) throw DomainError("omega_tilde_oracle evaluates m = 0 only");
  const int n = q.idx.n;
  if (n > kMaxBesselOrder) throw CapExceeded("omega_tilde_oracle limited to n <= 80");
  const long double x = q.x;
  const auto k = bessel_k_sequence(n, x);
  CompensatedSum<long double> sum;
  for (int j = 0; j <= n; ++j) sum.add(binomial(n, j).convert_to<long double>() * k[std::abs(n - 2 * j)]);
  const long double prefactor = std::exp(n * std::log(x / 2) - log_factorial_ld(n));
  const double value = static_cast<double>(prefactor * sum.value());
  const double rel = 0.5 * kEps + static_cast<double>(64.0L * (n + 8) * kEpsLd);
  return EvalResult::make(value, std::abs(value) * rel, cancellation_ratio(sum.abs_sum(), sum.value()));
}

EvalResult omega_tilde_deriv_oracle(const OmegaQuery& q) {
  check_index(q.idx);
  check_x(q.x);
  const int n = q.idx.n;
  const int m = q.idx.m;
  if (n > kMaxBesselOrder || m > 20)
    throw CapExceeded("omega_tilde_deriv_oracle limited to n <= 80, m <= 20");
  // Terms coefficient * x^a K_b(x), keyed by (a, b).
  std::map<std::pair<int, int>, Rational> terms;
  const Rational scale(BigInt(1), pow_int(2, n) * factorial(n));
  for (int j = 0; j <= n; ++j) terms[{n, std::abs(n - 2 * j)}] += scale * Rational(binomial(n, j));
  for (int d = 0; d < m; ++d) {
    std::map<std::pair<int, int>, Rational> next;
    for (const auto& [key, c] : terms) {
      const auto [a, b] = key;
      if (c == 0) continue;
      if (a != 0) next[{a - 1, b}] += c * a;
      next[{a, std::abs(b - 1)}] -= c / 2;
      next[{a, b + 1}] -= c / 2;
    }
    terms = std::move(next);
  }
  const long double x = q.x;
  const auto k = bessel_k_sequence(n + m, x);
  CompensatedSum<long double> sum;
  long double err = 0;
  for (const auto& [key, c] : terms) {
    if (c == 0) continue;
    const auto [a, b] = key;
    const long double term = to_long_double(c) * std::pow(x, static_cast<long double>(a)) * k[b];
    sum.add(term);
    err += std::abs(term) * (64.0L * (b + 8) + 8) * kEpsLd;
  }
  const double value = static_cast<double>(sum.value());
  const double abs_err = static_cast<double>(err) + 0.5 * kEps * std::abs(value);
  return EvalResult::make(value, abs_err, cancellation_ratio(static_cast<double>(sum.abs_sum()), value));
}

}  // namespace omegak
