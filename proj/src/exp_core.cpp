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

#include "omegak/exp_core.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "omegak/compensated.hpp"
#include "omegak/delta_expansion.hpp"
#include "omegak/errors.hpp"

namespace omegak {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kLn2 = 0.69314718055994530942;
constexpr int kTableSize = kMaxOrder + kMaxDerivative + 2;

struct LogFactorialTable {
  std::array<long double, kTableSize> ld{};
  std::array<double, kTableSize> d{};
  // (n+1/2) ln n - n + ln sqrt(2 pi) subtracted from ln n!, small n only.
  std::array<double, 16> stirling_error{};

  LogFactorialTable() {
    for (int n = 0; n < kTableSize; ++n) {
      ld[n] = std::lgamma(static_cast<long double>(n) + 1.0L);
      d[n] = static_cast<double>(ld[n]);
    }
    const long double half_log_2pi = 0.918938533204672741780329736406L;
    stirling_error[0] = static_cast<double>(ld[0] - half_log_2pi);
    for (int n = 1; n < 16; ++n) {
      const long double x = n;
      stirling_error[n] =
          static_cast<double>(ld[n] - (x + 0.5L) * std::log(x) + x - half_log_2pi);
    }
  }
};

const LogFactorialTable& lf_table() {
  static const LogFactorialTable table;
  return table;
}

double stirling_error(int n) {
  if (n < 16) return lf_table().stirling_error[n];
  const double nn = static_cast<double>(n) * n;
  constexpr double s0 = 1.0 / 12, s1 = 1.0 / 360, s2 = 1.0 / 1260, s3 = 1.0 / 1680,
                   s4 = 1.0 / 1188;
  return (s0 - (s1 - (s2 - (s3 - s4 / nn) / nn) / nn) / nn) / n;
}

// n ln(n/t) + t - n >= 0 together with the magnitude of the terms it was
// formed from (for the error model).
double deviance(double n, double t, double* term_scale) {
  const double diff = n - t;
  if (std::abs(diff) < 0.1 * (n + t)) {
    double v = diff / (n + t);
    double s = diff * v;
    double ej = 2.0 * n * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double s1 = s + ej / (2 * j + 1);
      if (s1 == s) break;
      s = s1;
    }
    *term_scale = s;
    return s;
  }
  const double lr = std::log(n / t);
  *term_scale = std::abs(n * lr) + t + n;
  return n * lr + t - n;
}

// ln g_n(t) and an absolute error bound on it.
double gn_log_err(int n, double t, double* err) {
  if (n == 0) {
    *err = kEps * t;
    return -t;
  }
  double scale = 0.0;
  const double bd0 = deviance(n, t, &scale);
  const double lg = -bd0 - 0.5 * std::log(2.0 * std::numbers::pi * n) - stirling_error(n);
  *err = kEps * (4.0 * scale + std::log(2.0 * std::numbers::pi * n) + 2.0 + std::abs(lg));
  return lg;
}

void check_t(double t) {
  if (!(t > 0.0) || !std::isfinite(t))
    throw DomainError("g_n^(m)(t) needs finite t > 0, got " + std::to_string(t));
}

// Floating value carried as mant * 2^exp so that long products neither
// overflow nor underflow.
struct Scaled {
  double mant = 1.0;
  long exp = 0;

  void normalize() {
    if (mant == 0.0 || !std::isfinite(mant)) return;
    int e = 0;
    mant = std::frexp(mant, &e);
    exp += e;
  }
  void mul(double x) {
    mant *= x;
    normalize();
  }
  void mul(const Scaled& o) {
    mant *= o.mant;
    exp += o.exp;
    normalize();
  }
};

Scaled scaled_pow(double base, int k) {
  Scaled r;
  Scaled b;
  b.mant = base;
  b.normalize();
  for (int i = 0; i < k; ++i) r.mul(b);
  return r;
}

Scaled scaled_inverse(const Scaled& s) {
  Scaled r;
  r.mant = 1.0 / s.mant;
  r.exp = -s.exp;
  r.normalize();
  return r;
}

// Sum of scaled terms with a per-term relative error bound.
struct ScaledSum {
  std::vector<Scaled> terms;
  std::vector<double> rel_err;

  void add(const Scaled& term, double rel) {
    if (term.mant == 0.0) return;
    terms.push_back(term);
    rel_err.push_back(rel);
  }

  // Returns sum = value * 2^exp with error and sum|terms| on the same scale.
  void evaluate(double* value, double* err, double* abs_sum, long* exp) const {
    *value = 0.0;
    *err = 0.0;
    *abs_sum = 0.0;
    *exp = 0;
    if (terms.empty()) return;
    long e_max = terms.front().exp;
    for (const auto& s : terms) e_max = std::max(e_max, s.exp);
    CompensatedSum<double> acc;
    double term_err = 0.0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const long shift = terms[i].exp - e_max;
      const double x = shift < -1100 ? 0.0 : std::ldexp(terms[i].mant, static_cast<int>(shift));
      acc.add(x);
      // Terms lost to underflow are below 2^-1100 of the largest one.
      term_err += std::abs(x) * rel_err[i] + (x == 0.0 ? std::numeric_limits<double>::denorm_min() : 0.0);
    }
    *value = acc.value();
    *abs_sum = acc.abs_sum();
    *err = term_err + 2.0 * kEps * std::abs(*value) +
           terms.size() * kEps * kEps * acc.abs_sum();
    *exp = e_max;
  }
};

// g_n(t) * sum * 2^exp as an EvalResult.
EvalResult combine(int n, double t, const ScaledSum& sum) {
  double s = 0, s_err = 0, s_abs = 0;
  long e = 0;
  sum.evaluate(&s, &s_err, &s_abs, &e);
  double lg_err = 0.0;
  const double lg = gn_log_err(n, t, &lg_err);
  const double cancel = cancellation_ratio(s_abs, s);
  const double rho = lg_err + 2.0 * kEps;
  if (s == 0.0) {
    const double err = s_err > 0 ? std::exp(lg + std::log(s_err) + e * kLn2) : 0.0;
    return EvalResult::make(0.0, err, cancel);
  }
  double value;
  if (lg > -700.0 && lg < 700.0 && std::abs(e) < 900) {
    value = std::ldexp(std::exp(lg) * s, static_cast<int>(e));
  } else {
    value = std::copysign(std::exp(lg + std::log(std::abs(s)) + e * kLn2), s);
  }
  const double err = std::abs(value) * (rho + s_err / std::abs(s)) +
                     (std::abs(value) < std::numeric_limits<double>::min()
                          ? std::numeric_limits<double>::denorm_min()
                          : 0.0);
  return EvalResult::make(value, err, cancel);
}

// Multiplies by t^power in place, also scaling the error.
EvalResult apply_weight(EvalResult r, int power, double t) {
  if (power == 0) return r;
  Scaled w = scaled_pow(t, std::abs(power));
  if (power < 0) w = scaled_inverse(w);
  auto scale = [&](double x) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    Scaled s;
    s.mant = x;
    s.normalize();
    s.mul(w);
    if (s.exp > 1100) return std::copysign(std::numeric_limits<double>::infinity(), x);
    if (s.exp < -1100) return 0.0;
    return std::ldexp(s.mant, static_cast<int>(s.exp));
  };
  const double value = scale(r.value);
  const double err = scale(r.abs_err) + std::abs(value) * (std::abs(power) + 2) * kEps;
  EvalResult out = EvalResult::make(value, err, r.cancellation);
  out.reliable = out.reliable && r.reliable;
  return out;
}

ScaledSum closed_terms(FamilyIndex idx, double t) {
  // sum_l C_l t^{-l}, C_l = binom(m,l) (-1)^{m-l} n!/(n-l)!
  ScaledSum sum;
  Scaled term;
  term.mant = (idx.m % 2 == 0) ? 1.0 : -1.0;
  term.normalize();
  sum.add(term, 0.0);
  const int top = std::min(idx.m, idx.n);
  for (int l = 1; l <= top; ++l) {
    const double num = static_cast<double>(idx.m - l + 1) * (idx.n - l + 1);
    term.mant = -term.mant * num / l / t;
    term.normalize();
    sum.add(term, 3.0 * l * kEps);
  }
  return sum;
}

ScaledSum delta_terms(FamilyIndex idx, double t) {
  const double nd = idx.n;
  const double delta = nd - t;
  const double delta_rounding = two_diff_error(nd, t, delta);
  const double delta_rel = delta == 0.0 ? 0.0 : std::abs(delta_rounding / delta);
  const auto& p = delta_expansion_double(idx.m);
  const int m = idx.m;
  const Scaled inv_tm = scaled_inverse(scaled_pow(t, m));
  std::vector<Scaled> dpow(m + 1);
  for (int k = 1; k <= m; ++k) {
    dpow[k] = dpow[k - 1];
    dpow[k].mul(delta);
  }
  ScaledSum sum;
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  Scaled npow;
  for (std::size_t l = 0; l < p.size(); ++l) {
    if (l > 0) npow.mul(nd);
    for (std::size_t k = 0; k < p[l].size(); ++k) {
      const double a = p[l][k];
      if (a == 0.0) continue;
      if (k > 0 && delta == 0.0) continue;
      Scaled term;
      term.mant = sign * a;
      term.normalize();
      term.mul(npow);
      term.mul(dpow[k]);
      term.mul(inv_tm);
      const double rel = kEps * (4.0 + l + k + m) + k * delta_rel;
      sum.add(term, rel);
    }
  }
  return sum;
}

// Pascal-row coefficients binom(m, j) for all m <= kMaxDerivative, built by
// the recursion c_{m,j} = c_{m-1,j-1} + c_{m-1,j}.
const std::vector<BigInt>& binomial_row(int m) {
  static const std::vector<std::vector<BigInt>> rows = [] {
    std::vector<std::vector<BigInt>> r(kMaxDerivative + 1);
    r[0] = {BigInt(1)};
    for (int k = 1; k <= kMaxDerivative; ++k) {
      r[k].assign(k + 1, BigInt(1));
      for (int j = 1; j < k; ++j) r[k][j] = r[k - 1][j - 1] + r[k - 1][j];
    }
    return r;
  }();
  return rows.at(m);
}

// Top 64 bits of |v| as a long double in [0.5, 1) times 2^exp.
long double split_big(const BigInt& v, long* exp) {
  const BigInt a = boost::multiprecision::abs(v);
  if (a == 0) {
    *exp = 0;
    return 0.0L;
  }
  const long bits = static_cast<long>(boost::multiprecision::msb(a)) + 1;
  const long shift = bits > 64 ? bits - 64 : 0;
  const BigInt top = a >> shift;
  long double mant = top.convert_to<long double>();
  int e = 0;
  mant = std::frexp(mant, &e);
  *exp = e + shift;
  return v < 0 ? -mant : mant;
}

}  // namespace

void check_index(FamilyIndex idx) {
  if (idx.n < 0 || idx.m < 0)
    throw DomainError("indices must be nonnegative: n=" + std::to_string(idx.n) +
                      " m=" + std::to_string(idx.m));
  if (idx.n > kMaxOrder || idx.m > kMaxDerivative)
    throw CapExceeded("index beyond caps (n <= 2000, m <= 60): n=" + std::to_string(idx.n) +
                      " m=" + std::to_string(idx.m));
}

double log_factorial(int n) {
  if (n < 0 || n >= kTableSize) throw CapExceeded("log_factorial argument out of table range");
  return lf_table().d[n];
}

long double log_factorial_ld(int n) {
  if (n < 0 || n >= kTableSize) throw CapExceeded("log_factorial argument out of table range");
  return lf_table().ld[n];
}

double gn_log(int n, double t) {
  check_index({n, 0});
  if (t < 0.0 || std::isnan(t)) throw DomainError("g_n(t) needs t >= 0");
  if (t == 0.0) return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  double err = 0.0;
  return gn_log_err(n, t, &err);
}

double gn_eval(int n, double t) {
  const double lg = gn_log(n, t);
  return std::exp(lg);
}

EvalResult gn_value(int n, double t) {
  check_index({n, 0});
  if (t < 0.0 || std::isnan(t)) throw DomainError("g_n(t) needs t >= 0");
  if (t == 0.0) return EvalResult::make(n == 0 ? 1.0 : 0.0, 0.0, 1.0);
  double err = 0.0;
  const double lg = gn_log_err(n, t, &err);
  const double v = std::exp(lg);
  const double floor = v < std::numeric_limits<double>::min() ? std::numeric_limits<double>::denorm_min() : 0.0;
  return EvalResult::make(v, v * (err + kEps) + floor, 1.0);
}

Rational SnmPolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  // Horner in t over exponents m, m-1, ..., m-top.
  const int top = static_cast<int>(coefficients.size()) - 1;
  for (int l = 0; l <= top; ++l) acc = acc * t + coefficients[l];
  Rational scale = 1;
  for (int k = 0; k < m - top; ++k) scale *= t;
  return acc * scale;
}

SnmPolynomial snm_polynomial(FamilyIndex idx) {
  check_index(idx);
  SnmPolynomial poly;
  poly.n = idx.n;
  poly.m = idx.m;
  const int top = std::min(idx.m, idx.n);
  poly.coefficients.reserve(top + 1);
  for (int l = 0; l <= top; ++l) {
    BigInt c = binomial(idx.m, l) * falling_factorial(idx.n, l);
    if ((idx.m - l) % 2 != 0) c = -c;
    poly.coefficients.emplace_back(c);
  }
  return poly;
}

EvalResult gn_deriv_closed(FamilyIndex idx, double t) {
  check_index(idx);
  check_t(t);
  return combine(idx.n, t, closed_terms(idx, t));
}

EvalResult gn_deriv_delta(FamilyIndex idx, double t) {
  check_index(idx);
  check_t(t);
  return combine(idx.n, t, delta_terms(idx, t));
}

EvalResult gn_deriv_recursive(FamilyIndex idx, double t) {
  check_index(idx);
  check_t(t);
  if (idx.n + idx.m > kMaxRecursiveOrder)
    throw CapExceeded("recursion route limited to n + m <= 300");
  const int n = idx.n;
  const int m = idx.m;
  const auto& coef = binomial_row(m);

  // t = M * 2^e exactly.
  int fe = 0;
  const double frac = std::frexp(t, &fe);
  BigInt mant = static_cast<long long>(std::ldexp(frac, 53));
  long e = fe - 53;
  while (mant % 2 == 0) {
    mant /= 2;
    ++e;
  }
  // n! * sum_j binom(m,j) (-1)^{m-j} t^{n-j}/(n-j)! = I * 2^{min(e,0) n}.
  BigInt acc = 0;
  const int top = std::min(m, n);
  BigInt ff = 1;  // n!/(n-j)!
  for (int j = 0; j <= top; ++j) {
    if (j > 0) ff *= (n - j + 1);
    BigInt term = coef[j] * ff * pow_int(mant, n - j);
    if (e >= 0)
      term <<= static_cast<unsigned>(e * (n - j));
    else
      term <<= static_cast<unsigned>(-e * j);
    if ((m - j) % 2 != 0)
      acc -= term;
    else
      acc += term;
  }
  if (acc == 0) return EvalResult::make(0.0, 0.0, 1.0);
  long ei = 0, ef = 0;
  const long double mi = split_big(acc, &ei);
  const long double mf = split_big(factorial(n), &ef);
  const long scale = ei - ef + (e < 0 ? e * n : 0);
  const long double et = std::exp(-static_cast<long double>(t));
  double value;
  if (et > 0.0L) {
    const long double q = std::ldexp((mi / mf) * et, static_cast<int>(std::max(-20000L, std::min(20000L, scale))));
    value = static_cast<double>(q);
  } else {
    const long double lv = std::log(std::abs(mi / mf)) - static_cast<long double>(t) +
                           scale * 0.693147180559945309417L;
    value = std::copysign(static_cast<double>(std::exp(lv)), static_cast<double>(mi));
  }
  double err = 2.0 * kEps * std::abs(value);
  if (std::abs(value) < std::numeric_limits<double>::min())
    err += std::numeric_limits<double>::denorm_min();
  // Exact summation: no rounding error is amplified by the alternating signs.
  return EvalResult::make(value, err, 1.0);
}

EvalResult gn_deriv(FamilyIndex idx, double t, DerivRoute route) {
  switch (route) {
    case DerivRoute::kClosed:
      return gn_deriv_closed(idx, t);
    case DerivRoute::kDelta:
      return gn_deriv_delta(idx, t);
    case DerivRoute::kRecursive:
      return gn_deriv_recursive(idx, t);
    case DerivRoute::kBest:
      break;
  }
  const EvalResult a = gn_deriv_closed(idx, t);
  if (a.cancellation <= 4.0) return a;
  const EvalResult b = gn_deriv_delta(idx, t);
  const EvalResult& pick = b.abs_err < a.abs_err ? b : a;
  if (pick.reliable || idx.n + idx.m > kMaxRecursiveOrder) return pick;
  return gn_deriv_recursive(idx, t);
}

EvalResult weighted_gn_deriv(FamilyIndex idx, int power, double t, DerivRoute route) {
  check_index(idx);
  check_t(t);
  if (route == DerivRoute::kRecursive) return apply_weight(gn_deriv_recursive(idx, t), power, t);
  if (route == DerivRoute::kBest) {
    const EvalResult a = weighted_gn_deriv(idx, power, t, DerivRoute::kClosed);
    if (a.cancellation <= 4.0) return a;
    const EvalResult b = weighted_gn_deriv(idx, power, t, DerivRoute::kDelta);
    const EvalResult& pick = b.abs_err < a.abs_err ? b : a;
    if (pick.reliable || idx.n + idx.m > kMaxRecursiveOrder) return pick;
    return weighted_gn_deriv(idx, power, t, DerivRoute::kRecursive);
  }
  ScaledSum sum = route == DerivRoute::kClosed ? closed_terms(idx, t) : delta_terms(idx, t);
  if (power != 0) {
    Scaled w = scaled_pow(t, std::abs(power));
    if (power < 0) w = scaled_inverse(w);
    for (std::size_t i = 0; i < sum.terms.size(); ++i) {
      sum.terms[i].mul(w);
      sum.rel_err[i] += (std::abs(power) + 1) * kEps;
    }
  }
  return combine(idx.n, t, sum);
}

long double gn_deriv_ld(FamilyIndex idx, long double t) {
  check_index(idx);
  if (!(t > 0.0L)) throw DomainError("g_n^(m)(t) needs t > 0");
  const long double lg = idx.n * std::log(t) - t - log_factorial_ld(idx.n);
  CompensatedSum<long double> acc;
  long double term = (idx.m % 2 == 0) ? 1.0L : -1.0L;
  acc.add(term);
  const int top = std::min(idx.m, idx.n);
  for (int l = 1; l <= top; ++l) {
    term = -term * static_cast<long double>(idx.m - l + 1) * (idx.n - l + 1) / l / t;
    acc.add(term);
  }
  return std::exp(lg) * acc.value();
}

}  // namespace omegak
