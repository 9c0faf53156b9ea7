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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "omegak/bessel_eval.hpp"

namespace omegak {

/// omega_n(d) = omega~_n(d / dt) / (2 pi) on a list of distances.
struct KernelTable {
  double dt = 1.0;
  double tol = 0.0;
  int n_max = 0;
  std::vector<double> distances;
  /// values[n][j] = omega_n(distances[j]); exact 0 past the cutoff.
  std::vector<std::vector<double>> values;
  std::vector<std::vector<double>> errors;
  /// First j with distances[j] / dt >= cutoff_radius(n, tol); size when none.
  std::vector<int> cutoff;

  std::size_t entries() const { return distances.size() * values.size(); }
  std::size_t zeroed() const;
  double sparsity() const;
};

/// Smallest x >= max(1, n + sqrt(n)) with
/// 3 exp(sqrt(n) - x/(1+sqrt(n))) / (2 pi sqrt(n+1)) <= tol.
/// tol == 0 disables the cutoff (returns +inf).
double cutoff_radius(int n, double tol);

/// Throws DomainError on bad input and Error naming (n, d) when an entry
/// cannot be evaluated.
KernelTable build_table(double dt, const std::vector<double>& distances, int n_max, double tol,
                        const QuadratureConfig& cfg = {}, int threads = 0);

/// u_k(d_j) = sum_{n <= k} omega_n(d_j) phi_j[k - n], one history per distance.
std::vector<double> convolve(const KernelTable& table, const std::vector<std::vector<double>>& history, int k);
/// Same with one history shared by all distances.
std::vector<double> convolve(const KernelTable& table, const std::vector<double>& history, int k);

struct CutoffSpotCheck {
  int sampled = 0;
  int violations = 0;
  double worst = 0.0;  // largest |omega_n(d)| + abs_err found
  int worst_n = -1;
  double worst_d = 0.0;
};

/// Re-evaluates a random fraction of the zeroed entries by quadrature.
CutoffSpotCheck spot_check_cutoffs(const KernelTable& table, double fraction, std::uint64_t seed,
                                   const QuadratureConfig& cfg = {});

/// Rows "n,d,value" with a header line.
std::string table_csv(const KernelTable& table);

/// "OMGK1", u32 n_max, u32 n_dist, f64 dt, f64 tol, row-major f64 values
/// (n outer), then f64 distances.  Little-endian.
void write_table_binary(const KernelTable& table, std::ostream& out);
KernelTable read_table_binary(std::istream& in);

}  // namespace omegak
