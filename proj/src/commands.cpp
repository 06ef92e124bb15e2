// Copyright 2026 The tracelab Authors.
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

#include "tracelab/commands.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "tracelab/cache.hpp"
#include "tracelab/correlation.hpp"
#include "tracelab/dual6.hpp"
#include "tracelab/error.hpp"
#include "tracelab/tracezoo.hpp"
#include "tracelab/voronoi2.hpp"

namespace tracelab::cli {
namespace {

TraceFn trace_from(const std::string& text, const FieldPtr& field) {
  return realize(parse_spec(text), field);
}

std::shared_ptr<const HeckeGL3> tables(const RunConfig& config, double X, std::ostream& log) {
  const auto bound = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(2.0 * X)));
  const auto dir = cache_dir(config);
  auto gl2 = std::make_shared<const HeckeGL2>(cache::load_or_build_tau(bound, dir, &log));
  return cache::load_or_build_sym2(std::move(gl2), bound, dir, &log);
}

}  // namespace

double tolerance(const RunConfig& config, const std::string& name, double fallback) {
  const auto it = config.tol.find(name);
  return it == config.tol.end() ? fallback : it->second;
}

std::filesystem::path cache_dir(const RunConfig& config) {
  if (config.no_cache) return {};
  return cache::resolve_dir(config.cache_dir);
}

int cmd_kloosterman(const RunConfig& config, std::int64_t p, int k, std::ostream& out,
                    std::ostream& log) {
  const auto field = make_field(p, config.p_cap);
  const auto kl = cache::load_or_build_kl(k, field, cache_dir(config), &log);
  report::write(out, report::kl_table(kl), config.output);
  return kOk;
}

DualCheck parse_dual_check(const std::string& name) {
  if (name == "kl2") return DualCheck::kl2;
  if (name == "psi") return DualCheck::psi;
  if (name == "ap") return DualCheck::ap;
  throw Error(Errc::bad_param, "unknown dual6 check \"" + name + "\" (kl2, psi, ap)");
}

int cmd_dual6(const RunConfig& config, std::int64_t p, DualCheck check, std::int64_t a,
              std::ostream& out, std::ostream& /*log*/) {
  const auto field = make_field(p, config.p_cap);
  double deviation = 0.0;
  double tol = 1e-9;
  const char* name = "kl2";
  switch (check) {
    case DualCheck::kl2:
      deviation = identity_kl2(field);
      break;
    case DualCheck::psi:
      deviation = identity_psi(a, field);
      name = "psi";
      break;
    case DualCheck::ap:
      deviation = identity_ap(a, field);
      tol = 1e-10;
      name = "ap";
      break;
  }
  tol = tolerance(config, "dual6", tol);
  const bool ok = deviation <= tol;
  report::Table t;
  t.record = true;
  t.columns = {"p", "check", "a", "max_deviation", "tolerance", "pass"};
  t.rows.push_back({p, std::string(name), check == DualCheck::kl2 ? std::int64_t{0} : a,
                    deviation, tol, ok});
  report::write(out, t, config.output);
  return ok ? kOk : kToleranceExceeded;
}

int cmd_correlate(const RunConfig& config, std::int64_t p, const std::string& k,
                  const std::string& kp, std::size_t trials, std::ostream& out,
                  std::ostream& log) {
  const auto field = make_field(p, config.p_cap);
  const auto kf = trace_from(k, field);
  const auto kpf = trace_from(kp, field);
  ScanConfig scan;
  scan.trials = trials;
  scan.seed = config.seed;
  scan.offdiag_threshold = tolerance(config, "offdiag", scan.offdiag_threshold);
  scan.diag_threshold = tolerance(config, "diag", scan.diag_threshold);
  scan.parallel = config.parallel;
  const auto result = sqrt_cancel_scan(kf, kpf, scan);
  report::write(out, report::scan_table(result), config.output);
  log << report::scan_summary(result) << "\n";
  return result.passed ? kOk : kToleranceExceeded;
}

WindowKind parse_window(const std::string& name) {
  if (name == "plain") return WindowKind::plain_bump;
  if (name == "oscillated") return WindowKind::oscillated_bump;
  throw Error(Errc::bad_param, "unknown window \"" + name + "\" (plain, oscillated)");
}

int cmd_twisted(const RunConfig& config, std::int64_t p, const std::string& k, double X,
                double Z, WindowKind window, std::int64_t r_max, std::ostream& out,
                std::ostream& log) {
  if (X < 0.0) throw Error(Errc::bad_param, "X must be >= 0");
  if (r_max < 0) throw Error(Errc::bad_param, "r-max must be >= 0");
  const auto field = make_field(p, config.p_cap);
  const auto kf = trace_from(k, field);
  const auto v = make_window(Z, window);
  TwistedSum sum;
  if (X >= 1.0) {
    const auto t = tables(config, X, log);
    sum = s_total_detail(kf, X, v, *t, r_max > 0 ? std::optional(r_max) : std::nullopt,
                         config.parallel);
  }
  report::write(out, report::twisted_record(p, k, X, Z, r_max, sum), config.output);
  return kOk;
}

int cmd_scaling(const RunConfig& config, const std::vector<std::int64_t>& primes,
                const std::string& k, double Z, WindowKind window, std::ostream& out,
                std::ostream& log) {
  const auto v = make_window(Z, window);
  std::shared_ptr<const HeckeGL3> t;
  if (!primes.empty()) {
    for (const auto p : primes) {
      if (p > 101) throw Error(Errc::bad_param, "scaling primes must be <= 101");
    }
    const auto pmax = *std::max_element(primes.begin(), primes.end());
    t = tables(config, static_cast<double>(pmax * pmax * pmax), log);
  }
  const auto result = scaling_experiment(k, primes, v, t, config.parallel);
  report::write(out, report::scaling_table(result), config.output);
  return kOk;
}

int cmd_voronoi(const RunConfig& config, std::int64_t c, std::int64_t u, double X, double Z,
                WindowKind window, std::int64_t tau_n, std::ostream& out, std::ostream& log) {
  if (c < 1 || arith::gcd(u, c) != 1) {
    throw Error(Errc::bad_param, "voronoi needs c >= 1 and gcd(u, c) = 1");
  }
  const auto v = make_window(Z, window);
  std::int64_t n = std::max<std::int64_t>(tau_n, 2 * static_cast<std::int64_t>(std::ceil(X)) + 2);
  VoronoiResult result;
  while (true) {
    try {
      result = voronoi_check(c, u, X, v, cache::load_or_build_tau(n, cache_dir(config), &log));
      break;
    } catch (const Error& e) {
      if (e.code() != Errc::table_too_small || 2 * n > kTauCap) throw;
      n *= 2;
      log << "voronoi: " << e.what() << "; retrying with N = " << n << "\n";
    }
  }
  report::write(out, report::voronoi_record(c, u, X, Z, result), config.output);
  const double rel = result.absdiff / std::max(std::abs(result.lhs), 1e-12);
  return rel <= tolerance(config, "voronoi", 1e-4) ? kOk : kToleranceExceeded;
}

int run_guarded(const std::function<int()>& body, std::ostream& log) {
  try {
    return body();
  } catch (const Error& e) {
    log << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace tracelab::cli
