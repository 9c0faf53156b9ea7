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

#include "omegak/delta_expansion.hpp"

#include <stdexcept>

#include "omegak/errors.hpp"
#include "omegak/exp_core.hpp"

namespace omegak {
namespace {

using Poly = std::vector<Rational>;
using Table = std::vector<Poly>;

// One step of p_{l,m+1} = (m - d) p_{l,m} - d p'_{l,m} + p'_{l-1,m} for all l.
Table step_expansion(const Table& cur, int m) {
  const int next_m = m + 1;
  Table out(next_m / 2 + 1);
  for (int l = 0; l <= next_m / 2; ++l) {
    Poly& q = out[l];
    q.assign(next_m - 2 * l + 1, Rational(0));
    for (int k = 0; k <= next_m - 2 * l; ++k) {
      Rational v = 0;
      if (l < static_cast<int>(cur.size())) {
        const Poly& p = cur[l];
        if (k < static_cast<int>(p.size())) v += Rational(m - k) * p[k];
        if (k >= 1 && k - 1 < static_cast<int>(p.size())) v -= p[k - 1];
      }
      if (l >= 1) {
        const Poly& lower = cur[l - 1];
        if (k + 1 < static_cast<int>(lower.size())) v += Rational(k + 1) * lower[k + 1];
      }
      q[k] = v;
    }
  }
  return out;
}

struct AllExpansions {
  std::vector<DeltaExpansion> exact;
  std::vector<std::vector<std::vector<double>>> rounded;

  AllExpansions() {
    Table cur{Poly{Rational(1)}};
    for (int m = 0; m <= kMaxDerivative; ++m) {
      if (m > 0) cur = step_expansion(cur, m - 1);
      DeltaExpansion e;
      e.m = m;
      e.p = cur;
      std::vector<std::vector<double>> r(cur.size());
      for (std::size_t l = 0; l < cur.size(); ++l)
        for (const auto& c : cur[l]) r[l].push_back(to_double(c));
      exact.push_back(std::move(e));
      rounded.push_back(std::move(r));
    }
  }
};

const AllExpansions& all_expansions() {
  static const AllExpansions all;
  return all;
}

constexpr int kCMaxL = 40;
constexpr int kCMaxK = 130;

const std::vector<std::vector<Rational>>& c_table() {
  static const std::vector<std::vector<Rational>> table = [] {
    std::vector<std::vector<Rational>> c(kCMaxL + 1, std::vector<Rational>(kCMaxK + 1, Rational(0)));
    c[0][0] = 1;
    for (int l = 0; l <= kCMaxL; ++l) {
      if (2 * l > kCMaxK) break;
      if (l > 0) c[l][2 * l] = Rational(1, BigInt(pow_int(2, l) * factorial(l)));
      for (int k = 2 * l; k < kCMaxK; ++k) {
        Rational v = Rational(k, k + 1) * c[l][k];
        if (l > 0 && k >= 1) v += c[l - 1][k - 1] / (k + 1);
        c[l][k + 1] = v;
      }
    }
    return c;
  }();
  return table;
}

}  // namespace

Rational DeltaExpansion::evaluate(int n, const Rational& delta) const {
  Rational total = 0;
  Rational npow = 1;
  for (const auto& poly : p) {
    Rational v = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = v * delta + *it;
    total += npow * v;
    npow *= n;
  }
  return total;
}

DeltaExpansion delta_expansion_build(int m) {
  if (m < 0 || m > kMaxDerivative) throw CapExceeded("delta expansion needs 0 <= m <= 60");
  Table cur{Poly{Rational(1)}};
  for (int k = 0; k < m; ++k) cur = step_expansion(cur, k);
  DeltaExpansion e;
  e.m = m;
  e.p = std::move(cur);
  return e;
}

const DeltaExpansion& delta_expansion(int m) {
  if (m < 0 || m > kMaxDerivative) throw CapExceeded("delta expansion needs 0 <= m <= 60");
  return all_expansions().exact[m];
}

const std::vector<std::vector<double>>& delta_expansion_double(int m) {
  if (m < 0 || m > kMaxDerivative) throw CapExceeded("delta expansion needs 0 <= m <= 60");
  return all_expansions().rounded[m];
}

Rational c_coefficient(int l, int k) {
  if (l < 0 || k < 0) throw DomainError("c_{l,k} needs l, k >= 0");
  if (l > kCMaxL || k > kCMaxK) throw CapExceeded("c_{l,k} table limited to l <= 40, k <= 130");
  return c_table()[l][k];
}

Rational a_coefficient(int l, int m, int k) {
  if (k < 0 || k > m) return 0;
  Rational v = c_coefficient(l, m - k) * Rational(falling_factorial(m, m - k));
  if ((k + l) % 2 != 0) v = -v;
  return v;
}

}  // namespace omegak
