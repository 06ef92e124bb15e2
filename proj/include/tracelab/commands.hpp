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

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tracelab/ffield.hpp"
#include "tracelab/report.hpp"
#include "tracelab/twisted.hpp"

namespace tracelab::cli {

enum ExitCode : int { kOk = 0, kToleranceExceeded = 1, kUsage = 2 };

struct RunConfig {
  std::uint64_t seed = 0;
  /// Unset means resolve_dir's default; an empty path disables the cache.
  std::optional<std::filesystem::path> cache_dir;
  bool no_cache = false;
  std::int64_t p_cap = kDefaultFieldCap;
  /// Named overrides, e.g. "dual6" or "offdiag"; see tolerance().
  std::map<std::string, double> tol;
  bool parallel = false;
  report::Format output = report::Format::csv;
};

/// The override for `name` if present, else `fallback`.
double tolerance(const RunConfig& config, const std::string& name, double fallback);

/// Directory used for table caches, or empty when caching is off.
std::filesystem::path cache_dir(const RunConfig& config);

/// Every command writes its report to `out` and diagnostics to `log`, and
/// returns an ExitCode. Library errors propagate; run_guarded maps them to kUsage.
int cmd_kloosterman(const RunConfig& config, std::int64_t p, int k, std::ostream& out,
                    std::ostream& log);

enum class DualCheck { kl2, psi, ap };
DualCheck parse_dual_check(const std::string& name);

/// Default tolerances: 1e-9 for kl2 and psi, 1e-10 for ap; override "dual6".
int cmd_dual6(const RunConfig& config, std::int64_t p, DualCheck check, std::int64_t a,
              std::ostream& out, std::ostream& log);

/// Overrides "offdiag" and "diag" set the scan thresholds. The summary line
/// goes to `log` so `out` stays a plain table.
int cmd_correlate(const RunConfig& config, std::int64_t p, const std::string& k,
                  const std::string& kp, std::size_t trials, std::ostream& out,
                  std::ostream& log);

/// r_max = 0 sums every r with X / r^2 >= 1.
int cmd_twisted(const RunConfig& config, std::int64_t p, const std::string& k, double X,
                double Z, WindowKind window, std::int64_t r_max, std::ostream& out,
                std::ostream& log);

int cmd_scaling(const RunConfig& config, const std::vector<std::int64_t>& primes,
                const std::string& k, double Z, WindowKind window, std::ostream& out,
                std::ostream& log);

/// Exit 1 when |lhs - rhs| / max(|lhs|, 1e-12) exceeds "voronoi" (default
/// 1e-4). The tau table starts at tau_n and doubles while the dual sum
/// outgrows it.
int cmd_voronoi(const RunConfig& config, std::int64_t c, std::int64_t u, double X, double Z,
                WindowKind window, std::int64_t tau_n, std::ostream& out, std::ostream& log);

/// "plain" or "oscillated"; BadParam otherwise.
WindowKind parse_window(const std::string& name);

/// Runs `body`, printing library errors to `log` and returning kUsage for them.
int run_guarded(const std::function<int()>& body, std::ostream& log);

}  // namespace tracelab::cli
