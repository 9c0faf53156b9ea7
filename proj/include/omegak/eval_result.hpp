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

#include <cmath>
#include <limits>

namespace omegak {

/// Results whose cancellation ratio exceeds this are flagged unreliable.
inline constexpr double kDefaultCancellationCap = 1e8;

/// Value of a numerical evaluation together with its error bookkeeping.
///
/// `cancellation` is the ratio sum|terms| / |result| of the final summation
/// (1 when every term has the same sign, +inf when the terms cancel to an
/// exact zero). `reliable` is false once that ratio exceeds the cap; such
/// results are still returned, never rejected.
struct EvalResult {
  double value = 0.0;
  double abs_err = 0.0;
  double cancellation = 1.0;
  bool reliable = true;

  static EvalResult make(double value, double abs_err, double cancellation,
                         double cap = kDefaultCancellationCap) {
    EvalResult r;
    r.value = value;
    r.abs_err = std::isnan(abs_err) ? std::numeric_limits<double>::infinity()
                                    : std::abs(abs_err);
    r.cancellation = cancellation < 1.0 ? 1.0 : cancellation;
    r.reliable = r.cancellation <= cap && std::isfinite(value);
    return r;
  }
};

/// Cancellation ratio of a sum given sum|terms| and |sum|.
inline double cancellation_ratio(double abs_sum, double sum) {
  if (abs_sum == 0.0) return 1.0;
  if (sum == 0.0) return std::numeric_limits<double>::infinity();
  return abs_sum / std::abs(sum);
}

}  // namespace omegak
