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

#include <stdexcept>
#include <string>

namespace omegak {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain (t < 0, x <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Index beyond the supported caps (n <= 2000, m <= 60, ...).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A bound was asked for at a point outside its validity region.
class RegionViolation : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature could not meet its tolerance; carries the best estimate.
class QuadratureFailure : public Error {
 public:
  QuadratureFailure(const std::string& what, double best_estimate,
                    double best_error)
      : Error(what), best_estimate_(best_estimate), best_error_(best_error) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double best_error() const noexcept { return best_error_; }

 private:
  double best_estimate_;
  double best_error_;
};

}  // namespace omegak
