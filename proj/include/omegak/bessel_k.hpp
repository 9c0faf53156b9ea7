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

namespace omegak {

inline constexpr int kMaxBesselOrder = 80;

/// K_order(x) for integer order 0..80 in extended precision: power series for
/// x <= 2, Steed's continued fraction for x > 2, then upward recurrence.
long double bessel_k_ld(int order, long double x);

/// K_0(x), ..., K_max_order(x) in extended precision; no order cap.
std::vector<long double> bessel_k_sequence(int max_order, long double x);

/// K_order(x) rounded to double.  Relative accuracy about 1e-15.
double bessel_k_oracle(int order, double x);

/// Only the series branch for K_0, K_1 (any x > 0; slow and inaccurate for
/// large x).  Used to validate the crossover.
long double bessel_k01_series(int order, long double x);
/// Only the continued-fraction branch for K_0, K_1 (x > 0.5 or so).
long double bessel_k01_cf(int order, long double x);

}  // namespace omegak
