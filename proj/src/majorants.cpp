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

#include "omegak/majorants.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "omegak/errors.hpp"

namespace omegak {
namespace {

std::vector<std::vector<double>> build_a_table(MajorantReading reading) {
  std::vector<std::vector<double>> a(kMaxOrder + 1, std::vector<double>(kMaxDerivative + 1));
  for (int n = 0; n <= kMaxOrder; ++n) {
    for (int m = 0; m <= kMaxDerivative; ++m) {
      double v;
      if (n == 0) {
        v = 1.0;
      } else if (n == 1 && !(m == 0 && reading == MajorantReading::kMZeroRow)) {
        v = m;
      } else if (m == 0) {
        v = 1.0 / std::sqrt(n + 1.0);
      } else if (m == 1) {
        v = std::sqrt(2.0) / (n + 1.0);
      } else {
        v = a[n - 1][m - 1] / std::sqrt(static_cast<double>(n)) +
            (m - 1.0) / n * a[n - 1][m - 2];
      }
      a[n][m] = v;
    }
  }
  return a;
}

}  // namespace

double majorant_A(FamilyIndex idx, MajorantReading reading) {
  check_index(idx);
  static const auto row_order = build_a_table(MajorantReading::kRowOrder);
  static const auto m_zero_row = build_a_table(MajorantReading::kMZeroRow);
  const auto& t = reading == MajorantReading::kRowOrder ? row_order : m_zero_row;
  return t[idx.n][idx.m];
}

Rational majorant_G_exact(FamilyIndex idx) {
  check_index(idx);
  if (!(2 * idx.n < idx.m))
    throw DomainError("G_n^(m) needs n < m/2, got n=" + std::to_string(idx.n) +
                      " m=" + std::to_string(idx.m));
  const BigInt num = pow_int(2, idx.n) * double_factorial(idx.m - 1);
  const BigInt den = factorial(idx.n) * double_factorial(idx.m - 1 - 2 * idx.n);
  return Rational(num, den);
}

double majorant_G(FamilyIndex idx) { return to_double(majorant_G_exact(idx)); }

}  // namespace omegak
