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

#include "omegak/cq_kernel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "omegak/errors.hpp"
#include "omegak/parallel.hpp"

namespace omegak {
namespace {

constexpr char kMagic[5] = {'O', 'M', 'G', 'K', '1'};
constexpr double kInvTwoPi = 0.5 / std::numbers::pi;

static_assert(std::endian::native == std::endian::little, "binary tables assume a little-endian host");

template <class T>
void put(std::ostream& out, T v) {
  char buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));
  out.write(buf, sizeof(T));
}

template <class T>
T get(std::istream& in) {
  char buf[sizeof(T)];
  if (!in.read(buf, sizeof(T))) throw Error("binary table truncated");
  T v;
  std::memcpy(&v, buf, sizeof(T));
  return v;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void fill_cutoffs(KernelTable& t) {
  t.cutoff.assign(t.n_max + 1, static_cast<int>(t.distances.size()));
  for (int n = 0; n <= t.n_max; ++n) {
    const double radius = cutoff_radius(n, t.tol);
    for (std::size_t j = 0; j < t.distances.size(); ++j) {
      if (t.distances[j] / t.dt >= radius) {
        t.cutoff[n] = static_cast<int>(j);
        break;
      }
    }
  }
}

}  // namespace

std::size_t KernelTable::zeroed() const {
  std::size_t z = 0;
  for (std::size_t n = 0; n < cutoff.size(); ++n) z += distances.size() - cutoff[n];
  return z;
}

double KernelTable::sparsity() const {
  return entries() == 0 ? 0.0 : static_cast<double>(zeroed()) / static_cast<double>(entries());
}

double cutoff_radius(int n, double tol) {
  check_index({n, 0});
  if (!(tol >= 0.0) || !std::isfinite(tol)) throw DomainError("cutoff tolerance must be finite and >= 0");
  if (tol == 0.0) return std::numeric_limits<double>::infinity();
  const double r = std::sqrt(static_cast<double>(n));
  const double floor = std::max(1.0, n + r);
  const double x = (1.0 + r) * (r + std::log(3.0 * kInvTwoPi / (tol * std::sqrt(n + 1.0))));
  return std::max(floor, x);
}

KernelTable build_table(double dt, const std::vector<double>& distances, int n_max, double tol,
                        const QuadratureConfig& cfg, int threads) {
  cfg.validate();
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("dt must be positive");
  if (n_max < 0) throw DomainError("n_max must be >= 0");
  check_index({n_max, 0});
  if (distances.empty()) throw DomainError("at least one distance is required");
  for (std::size_t j = 0; j < distances.size(); ++j) {
    if (!(distances[j] > 0.0) || !std::isfinite(distances[j])) throw DomainError("distances must be positive");
    if (j > 0 && !(distances[j] > distances[j - 1])) throw DomainError("distances must be strictly ascending");
  }
  KernelTable t;
  t.dt = dt;
  t.tol = tol;
  t.n_max = n_max;
  t.distances = distances;
  fill_cutoffs(t);
  t.values.assign(n_max + 1, std::vector<double>(distances.size(), 0.0));
  t.errors.assign(n_max + 1, std::vector<double>(distances.size(), 0.0));
  std::vector<std::string> failures(n_max + 1);
  parallel_for(
      static_cast<std::size_t>(n_max + 1),
      [&](std::size_t row) {
        const int n = static_cast<int>(row);
        for (int j = 0; j < t.cutoff[n]; ++j) {
          try {
            const EvalResult r = omega_tilde({{n, 0}, distances[j] / dt}, cfg);
            t.values[n][j] = r.value * kInvTwoPi;
            t.errors[n][j] = r.abs_err * kInvTwoPi + 0.5 * std::numeric_limits<double>::epsilon() * t.values[n][j];
          } catch (const Error& e) {
            failures[n] = "kernel entry n=" + std::to_string(n) + " d=" + num(distances[j]) + ": " + e.what();
            return;
          }
        }
      },
      threads);
  for (const auto& f : failures)
    if (!f.empty()) throw Error(f);
  return t;
}

std::vector<double> convolve(const KernelTable& table, const std::vector<std::vector<double>>& history, int k) {
  if (k < 0) throw DomainError("time index must be >= 0");
  if (k > table.n_max) throw DomainError("time index exceeds the table's n_max");
  if (history.size() != table.distances.size()) throw DomainError("need one history per distance");
  std::vector<double> out(table.distances.size(), 0.0);
  for (std::size_t j = 0; j < table.distances.size(); ++j) {
    if (history[j].size() < static_cast<std::size_t>(k) + 1) throw DomainError("history shorter than k + 1");
    double acc = 0.0;
    for (int n = 0; n <= k; ++n) {
      if (static_cast<int>(j) >= table.cutoff[n]) continue;
      acc += table.values[n][j] * history[j][k - n];
    }
    out[j] = acc;
  }
  return out;
}

std::vector<double> convolve(const KernelTable& table, const std::vector<double>& history, int k) {
  return convolve(table, std::vector<std::vector<double>>(table.distances.size(), history), k);
}

CutoffSpotCheck spot_check_cutoffs(const KernelTable& table, double fraction, std::uint64_t seed,
                                   const QuadratureConfig& cfg) {
  if (!(fraction > 0.0 && fraction <= 1.0)) throw DomainError("spot-check fraction must be in (0, 1]");
  std::vector<std::pair<int, int>> zeroed;
  for (int n = 0; n <= table.n_max; ++n)
    for (int j = table.cutoff[n]; j < static_cast<int>(table.distances.size()); ++j) zeroed.emplace_back(n, j);
  CutoffSpotCheck c;
  if (zeroed.empty()) return c;
  const std::size_t want =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(zeroed.size()))));
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> picked;
  std::sample(zeroed.begin(), zeroed.end(), std::back_inserter(picked), want, rng);
  for (const auto& [n, j] : picked) {
    const double d = table.distances[j];
    const EvalResult r = omega_tilde({{n, 0}, d / table.dt}, cfg);
    const double upper = (std::abs(r.value) + r.abs_err) * kInvTwoPi;
    ++c.sampled;
    if (upper > table.tol) ++c.violations;
    if (upper > c.worst) {
      c.worst = upper;
      c.worst_n = n;
      c.worst_d = d;
    }
  }
  return c;
}

std::string table_csv(const KernelTable& table) {
  std::ostringstream os;
  os << "n,d,value\n";
  for (int n = 0; n <= table.n_max; ++n)
    for (std::size_t j = 0; j < table.distances.size(); ++j)
      os << n << ',' << num(table.distances[j]) << ',' << num(table.values[n][j]) << '\n';
  return os.str();
}

void write_table_binary(const KernelTable& table, std::ostream& out) {
  out.write(kMagic, sizeof kMagic);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(table.n_max));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(table.distances.size()));
  put<double>(out, table.dt);
  put<double>(out, table.tol);
  for (const auto& row : table.values)
    for (double v : row) put<double>(out, v);
  for (double d : table.distances) put<double>(out, d);
  if (!out) throw Error("failed writing binary table");
}

KernelTable read_table_binary(std::istream& in) {
  char magic[sizeof kMagic];
  if (!in.read(magic, sizeof magic) || std::memcmp(magic, kMagic, sizeof kMagic) != 0)
    throw Error("not an OMGK1 kernel table");
  KernelTable t;
  t.n_max = static_cast<int>(get<std::uint32_t>(in));
  const std::uint32_t n_dist = get<std::uint32_t>(in);
  t.dt = get<double>(in);
  t.tol = get<double>(in);
  if (t.n_max > kMaxOrder || n_dist == 0 || n_dist > (1u << 26)) throw Error("implausible kernel table header");
  t.values.assign(t.n_max + 1, std::vector<double>(n_dist));
  for (auto& row : t.values)
    for (double& v : row) v = get<double>(in);
  t.distances.resize(n_dist);
  for (double& d : t.distances) d = get<double>(in);
  t.errors.assign(t.n_max + 1, std::vector<double>(n_dist, 0.0));
  fill_cutoffs(t);
  return t;
}

}  // namespace omegak
