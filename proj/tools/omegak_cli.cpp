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

// omegak command-line front end.
//
// Exit codes: 0 pass, 1 certification or check failure, 2 usage error,
// 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "omegak/bessel_eval.hpp"
#include "omegak/bounds.hpp"
#include "omegak/certify.hpp"
#include "omegak/cq_kernel.hpp"
#include "omegak/errors.hpp"
#include "omegak/exp_core.hpp"
#include "omegak/identities.hpp"

namespace {

using namespace omegak;
using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Writes through a temporary file in the same directory, then renames.
void write_atomic(const std::filesystem::path& path, const std::string& data) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const std::filesystem::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << data;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string bound_list_text() {
  std::string s;
  for (const auto& id : bound_ids()) s += "  " + id + "\n";
  s += "  estomegatildenm1sa (both C variants)\n";
  return s;
}

std::vector<std::string> expand_bound_ids(const std::vector<std::string>& requested) {
  if (requested.empty()) return bound_ids();
  std::vector<std::string> out;
  const auto known = bound_ids();
  for (const auto& id : requested) {
    if (id == "estomegatildenm1sa") {
      out.push_back("estomegatildenm1sa-C2");
      out.push_back("estomegatildenm1sa-C4");
    } else if (std::find(known.begin(), known.end(), id) != known.end()) {
      out.push_back(id);
    } else {
      throw UsageError("unknown bound id '" + id + "'; known ids:\n" + bound_list_text());
    }
  }
  return out;
}

// ---- eval ----

struct EvalArgs {
  std::string family = "omega";
  int n = -1, m = 0;
  double x = 0.0;
  std::string method = "quad";
  std::string format = "text";
};

struct Method {
  std::string name;
  EvalResult result;
  std::string error;
  bool domain = false;
};

int run_eval(const EvalArgs& a) {
  if (a.n < 0 || a.m < 0) throw UsageError("--n and --m must be >= 0");
  if (!(a.x > 0.0) || !std::isfinite(a.x)) throw UsageError("--x must be positive");
  check_index({a.n, a.m});
  std::vector<Method> methods;
  auto attempt = [&](const std::string& name, auto fn) {
    Method md{name, {}, {}, false};
    try {
      md.result = fn();
    } catch (const DomainError& e) {
      md.error = e.what();
      md.domain = true;
    } catch (const Error& e) {
      md.error = e.what();
    }
    methods.push_back(md);
  };
  const OmegaQuery q{{a.n, a.m}, a.x};
  const bool all = a.method == "all";
  if (a.family == "omega") {
    if (all || a.method == "quad")
      attempt("quad", [&] { return a.m == 0 ? omega_tilde(q) : omega_tilde_deriv(q); });
    if (all || a.method == "oracle")
      attempt("oracle", [&] { return a.m == 0 ? omega_tilde_oracle(q) : omega_tilde_deriv_oracle(q); });
    if (all || a.method == "series") attempt("series", [&] { return omega_tilde_deriv_series(q); });
  } else {
    if (all || a.method == "closed") attempt("closed", [&] { return gn_deriv_closed(q.idx, a.x); });
    if (all || a.method == "delta") attempt("delta", [&] { return gn_deriv_delta(q.idx, a.x); });
    if (all || a.method == "recursive") attempt("recursive", [&] { return gn_deriv_recursive(q.idx, a.x); });
    if (all || a.method == "best") attempt("best", [&] { return gn_deriv(q.idx, a.x); });
  }
  if (methods.empty()) throw UsageError("method '" + a.method + "' does not apply to family " + a.family);
  bool any_ok = false;
  for (const auto& md : methods) any_ok = any_ok || md.error.empty();

  if (a.format == "json") {
    Json j;
    j["family"] = a.family;
    j["n"] = a.n;
    j["m"] = a.m;
    j["x"] = a.x;
    Json arr = Json::array();
    for (const auto& md : methods) {
      Json e;
      e["method"] = md.name;
      if (md.error.empty()) {
        e["value"] = md.result.value;
        e["abs_err"] = md.result.abs_err;
        e["cancellation"] = md.result.cancellation;
        e["reliable"] = md.result.reliable;
      } else {
        e["error"] = md.error;
      }
      arr.push_back(e);
    }
    j["methods"] = arr;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& md : methods) {
      if (md.error.empty())
        std::cout << md.name << ": value=" << num(md.result.value) << " abs_err=" << num(md.result.abs_err)
                  << " reliable=" << (md.result.reliable ? "yes" : "no") << "\n";
      else
        std::cout << md.name << ": error: " << md.error << "\n";
    }
    if (methods.size() > 1) {
      for (std::size_t i = 0; i < methods.size(); ++i)
        for (std::size_t k = i + 1; k < methods.size(); ++k) {
          if (!methods[i].error.empty() || !methods[k].error.empty()) continue;
          const double d = std::abs(methods[i].result.value - methods[k].result.value);
          const double tol = methods[i].result.abs_err + methods[k].result.abs_err;
          std::cout << "delta " << methods[i].name << "-" << methods[k].name << ": " << num(d)
                    << " (tolerance " << num(tol) << ") " << (d <= tol ? "agree" : "DISAGREE") << "\n";
        }
    }
  }
  if (!any_ok) {
    bool all_domain = true;
    for (const auto& md : methods) all_domain = all_domain && md.domain;
    return all_domain ? kExitUsage : kExitNumeric;
  }
  return kExitPass;
}

// ---- certify ----

struct CertifyArgs {
  std::vector<std::string> bounds;
  std::string grid = "default";
  std::vector<int> n_values, m_values;
  int points = 0;
  bool fit_gamma = false;
  bool majorants = true;
  std::string out;
  int threads = 0;
  std::uint64_t seed = 0;
};

int run_certify(const CertifyArgs& a) {
  const auto ids = expand_bound_ids(a.bounds);
  GridSpec grid;
  if (a.grid == "default")
    grid = GridSpec::default_grid();
  else if (a.grid == "dense")
    grid = GridSpec::dense_grid();
  else
    throw UsageError("--grid must be default or dense");
  if (!a.n_values.empty()) grid.n_values = a.n_values;
  if (!a.m_values.empty()) grid.m_values = a.m_values;
  if (a.points > 0) grid.points_per_interval = a.points;
  try {
    grid.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  CertifyOptions opt;
  opt.fit = a.fit_gamma;
  opt.majorant_checks = a.majorants;
  opt.sweep.threads = a.threads;
  const CertReport rep = certify(ids, grid, opt);

  const std::filesystem::path dir(a.out);
  write_atomic(dir / "certificate.json", report_json(rep));
  write_atomic(dir / "certificate.csv", report_csv(rep));

  std::cout << "grid " << rep.grid_hash << " seed " << a.seed << "\n";
  for (const auto& b : rep.bounds) {
    std::cout << status_name(b.status) << " " << b.bound_id << " gamma=" << num(b.constants.gamma);
    if (b.fit.applicable) std::cout << (b.fit.success ? " (fitted)" : " (fit failed)");
    std::cout << " points=" << b.points << " failed=" << b.failed << " unreliable=" << b.unreliable
              << " tight=" << b.tight << "\n";
  }
  for (const auto& c : rep.majorants) {
    std::cout << "majorant " << (c.reading == MajorantReading::kRowOrder ? "row-order" : "m0-row")
              << " samples=" << c.samples << " violations=" << c.violations << " worst_ratio=" << num(c.worst_ratio)
              << "\n";
  }
  std::cout << "overall " << status_name(rep.status()) << "\n";
  return rep.status() == BoundStatus::kPass ? kExitPass : kExitFail;
}

// ---- identities ----

struct IdentityArgs {
  int max_n = 30;
  int max_m = 10;
  int max_r = 3;
  int mu_max = 8;
  int df_max = 400;
  std::vector<double> xs{0.5, 1.0, 2.0, 5.0, 10.0};
  int threads = 0;
  std::uint64_t seed = 0;
};

int run_identities(const IdentityArgs& a) {
  if (a.max_n < 1 || a.max_m < 1 || a.max_r < 0 || a.mu_max < 1 || a.df_max < 0 || a.xs.empty())
    throw UsageError("identity ranges must be nonempty");
  for (double x : a.xs)
    if (!(x > 0.0)) throw UsageError("--x values must be positive");
  std::cout << "seed " << a.seed << "\n";
  const TaylorGridResult t = taylor_remainder_grid(a.mu_max);
  std::cout << (t.failed == 0 ? "PASS" : "FAIL") << " taylor_remainder checked=" << t.checked
            << " failed=" << t.failed << " worst_ratio=" << num(t.worst_ratio) << " (mu=" << t.worst_mu
            << " t=" << num(t.worst_t) << " x=" << num(t.worst_x) << ")\n";
  QuadratureConfig cfg;
  const IdentityGridResult g = integral_identity_grid(a.max_n, a.max_m, a.max_r, a.xs, 1e-9, cfg, a.threads);
  std::cout << (g.failed == 0 ? "PASS" : "FAIL") << " integral_identity checked=" << g.checked
            << " failed=" << g.failed << " worst_residual=" << num(g.worst_residual) << " (n=" << g.worst_n
            << " m=" << g.worst_m << " r=" << g.worst_r << " x=" << num(g.worst_x) << ")\n";
  const DoubleFactorialSweep d = double_factorial_sweep(a.df_max);
  std::cout << (d.failed == 0 ? "PASS" : "FAIL") << " double_factorial checked=" << d.checked
            << " failed=" << d.failed;
  if (d.failed) std::cout << " first=(" << d.first_failed_m << "," << d.first_failed_k << ")";
  std::cout << "\n";
  return t.failed == 0 && g.failed == 0 && d.failed == 0 ? kExitPass : kExitFail;
}

// ---- kernel ----

struct KernelArgs {
  double dt = 0.0, dmin = 0.0, dmax = 0.0, tol = 1e-10;
  int nd = 0, nmax = 0;
  std::string spacing = "linear";
  std::string format = "csv";
  std::string out;
  double spot_check = 0.0;
  int threads = 0;
  std::uint64_t seed = 0;
};

int run_kernel(const KernelArgs& a) {
  if (!(a.dt > 0.0)) throw UsageError("--dt must be positive");
  if (!(a.dmin > 0.0) || !(a.dmax >= a.dmin)) throw UsageError("need 0 < dmin <= dmax");
  if (a.nd < 1) throw UsageError("--nd must be >= 1");
  if (a.nmax < 0) throw UsageError("--nmax must be >= 0");
  if (!(a.tol >= 0.0)) throw UsageError("--tol must be >= 0");
  if (a.nd > 1 && !(a.dmax > a.dmin)) throw UsageError("several distances need dmax > dmin");
  std::vector<double> d(a.nd);
  for (int j = 0; j < a.nd; ++j) {
    if (a.nd == 1)
      d[j] = a.dmin;
    else if (a.spacing == "log")
      d[j] = std::exp(std::log(a.dmin) + (std::log(a.dmax) - std::log(a.dmin)) * j / (a.nd - 1));
    else
      d[j] = a.dmin + (a.dmax - a.dmin) * j / (a.nd - 1);
  }
  d.back() = a.dmax;
  const KernelTable t = build_table(a.dt, d, a.nmax, a.tol, {}, a.threads);
  if (a.format == "csv") {
    write_atomic(a.out, table_csv(t));
  } else {
    std::ostringstream os(std::ios::binary);
    write_table_binary(t, os);
    write_atomic(a.out, os.str());
  }
  std::cout << "entries=" << t.entries() << " zeroed=" << t.zeroed() << " sparsity=" << num(t.sparsity())
            << " seed " << a.seed << "\n";
  for (int n = 0; n <= t.n_max; ++n)
    std::cout << "n=" << n << " cutoff_index=" << t.cutoff[n] << " radius=" << num(cutoff_radius(n, t.tol))
              << "\n";
  if (a.spot_check > 0.0) {
    const CutoffSpotCheck c = spot_check_cutoffs(t, a.spot_check, a.seed);
    std::cout << (c.violations == 0 ? "PASS" : "FAIL") << " cutoff spot-check sampled=" << c.sampled
              << " violations=" << c.violations << " worst=" << num(c.worst) << "\n";
    if (c.violations) return kExitFail;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"omegak: scaled Bessel-K derivative evaluation and bound certification"};
  app.require_subcommand(1);
  app.footer("Exit codes: 0 pass, 1 failure, 2 usage, 3 numeric failure.  Bound ids: certify --help.");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate omega~_n^(m)(x) or g_n^(m)(t)");
  eval->add_option("--family", ea.family, "omega or g")->check(CLI::IsMember({"omega", "g"}));
  eval->add_option("--n", ea.n, "family index n")->required();
  eval->add_option("--m", ea.m, "derivative order m");
  eval->add_option("--x", ea.x, "argument (x for omega, t for g)")->required();
  eval->add_option("--method", ea.method, "quad|oracle|series|all (omega); closed|delta|recursive|best|all (g)")
      ->check(CLI::IsMember({"quad", "oracle", "series", "closed", "delta", "recursive", "best", "all"}));
  eval->add_option("--format", ea.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  CertifyArgs ca;
  auto* cert = app.add_subcommand("certify", "Check the bound catalog on a grid");
  cert->add_option("--bounds", ca.bounds, "comma-separated bound ids (default: all)")->delimiter(',');
  cert->add_option("--grid", ca.grid, "default or dense")->check(CLI::IsMember({"default", "dense"}));
  cert->add_option("--n-values", ca.n_values, "override grid n list")->delimiter(',');
  cert->add_option("--m-values", ca.m_values, "override grid m list")->delimiter(',');
  cert->add_option("--points", ca.points, "points per interval");
  cert->add_flag("--fit-gamma", ca.fit_gamma, "fit the free constant gamma per bound");
  cert->add_flag("!--no-majorants", ca.majorants, "skip the majorant property checks");
  cert->add_option("--out", ca.out, "output directory")->required();
  cert->add_option("--threads", ca.threads, "worker threads (default: OMEGAK_THREADS or hardware)");
  cert->add_option("--seed", ca.seed, "echoed; certification grids are deterministic");
  cert->footer("Bound ids:\n" + bound_list_text());

  IdentityArgs ia;
  auto* ident = app.add_subcommand("identities", "Run the Taylor, integral identity and double factorial checks");
  ident->add_option("--max-n", ia.max_n, "largest n for the integral identity");
  ident->add_option("--max-m", ia.max_m, "largest m for the integral identity");
  ident->add_option("--max-r", ia.max_r, "largest r for the integral identity");
  ident->add_option("--x", ia.xs, "x values for the integral identity")->delimiter(',');
  ident->add_option("--mu-max", ia.mu_max, "largest Taylor order");
  ident->add_option("--df-max", ia.df_max, "largest m for the double factorial sweep");
  ident->add_option("--threads", ia.threads, "worker threads");
  ident->add_option("--seed", ia.seed, "echoed");

  KernelArgs ka;
  auto* kern = app.add_subcommand("kernel", "Build a convolution-quadrature kernel table");
  kern->add_option("--dt", ka.dt, "time step")->required();
  kern->add_option("--dmin", ka.dmin, "smallest distance")->required();
  kern->add_option("--dmax", ka.dmax, "largest distance")->required();
  kern->add_option("--nd", ka.nd, "number of distances")->required();
  kern->add_option("--nmax", ka.nmax, "largest n")->required();
  kern->add_option("--tol", ka.tol, "cutoff tolerance (0 disables)");
  kern->add_option("--spacing", ka.spacing, "linear or log")->check(CLI::IsMember({"linear", "log"}));
  kern->add_option("--format", ka.format, "csv or bin")->check(CLI::IsMember({"csv", "bin"}));
  kern->add_option("--out", ka.out, "output file")->required();
  kern->add_option("--spot-check", ka.spot_check, "fraction of zeroed entries to re-evaluate");
  kern->add_option("--threads", ka.threads, "worker threads");
  kern->add_option("--seed", ka.seed, "seed for the spot-check sample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return run_eval(ea);
    if (cert->parsed()) return run_certify(ca);
    if (ident->parsed()) return run_identities(ia);
    if (kern->parsed()) return run_kernel(ka);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}
