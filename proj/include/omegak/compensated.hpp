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

namespace omegak {

/// Neumaier's variant of Kahan summation, also tracking sum|x_i|.
template <class Real>
class CompensatedSum {
 public:
  void add(Real x) {
    const Real t = sum_ + x;
    using std::abs;
    if (abs(sum_) >= abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
    abs_sum_ += abs(x);
    ++count_;
  }

  Real value() const { return sum_ + comp_; }
  Real abs_sum() const { return abs_sum_; }
  int count() const { return count_; }

 private:
  Real sum_ = 0;
  Real comp_ = 0;
  Real abs_sum_ = 0;
  int count_ = 0;
};

/// Exact rounding error of a - b (Knuth's TwoSum): a - b == diff + err exactly.
template <class Real>
inline Real two_diff_error(Real a, Real b, Real diff) {
  const Real bb = a - diff;
  return (a - (diff + bb)) + (bb - b);
}

}  // namespace omegak
