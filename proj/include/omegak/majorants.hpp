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

#include "omegak/exp_core.hpp"

namespace omegak {

/// Which value A_1^(0) takes.  The n = 1 row gives m = 0; the m = 0 row gives
/// 1/sqrt(2).  kRowOrder applies the rows in the order n=0, n=1, m=0, m=1.
enum class MajorantReading { kRowOrder, kMZeroRow };

/// A_n^(m): majorant of |g_n^(m)| on the band n - sqrt(n) <= t <= n + sqrt(n).
double majorant_A(FamilyIndex idx, MajorantReading reading = MajorantReading::kRowOrder);

/// G_n^(m) = 2^n (m-1)!! / (n! (m-1-2n)!!) for n < m/2.
double majorant_G(FamilyIndex idx);
Rational majorant_G_exact(FamilyIndex idx);

}  // namespace omegak
