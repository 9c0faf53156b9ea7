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

#include <vector>

#include "omegak/exact.hpp"

namespace omegak {

/// Expansion of s~_{n,m}(delta) = (-1)^m s_{n,m}(n - delta) as
/// sum_l n^l p_{l,m}(delta).
struct DeltaExpansion {
  int m = 0;
  /// p[l][k] is the coefficient of delta^k in p_{l,m}; 0 <= l <= m/2, 0 <= k <= m - 2l.
  std::vector<std::vector<Rational>> p;

  Rational evaluate(int n, const Rational& delta) const;
};

/// Builds p_{l,m} from p_{l,m+1} = (m - delta) p_{l,m} - delta p'_{l,m} + p'_{l-1,m}.
DeltaExpansion delta_expansion_build(int m);

/// Shared immutable expansion for 0 <= m <= kMaxDerivative.
const DeltaExpansion& delta_expansion(int m);

/// Same coefficients rounded to double, p[l][k].
const std::vector<std::vector<double>>& delta_expansion_double(int m);

/// c_{l,k} from c_{l,k+1} = k/(k+1) c_{l,k} + c_{l-1,k-1}/(k+1), c_{l,2l} = 1/(2^l l!).
/// Zero for k < 2l.
Rational c_coefficient(int l, int k);

/// a_{l,m,k} = c_{l,m-k} (-1)^{k+l} m!/k!.
Rational a_coefficient(int l, int m, int k);

}  // namespace omegak
