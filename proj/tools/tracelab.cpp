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

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tracelab/commands.hpp"
#include "tracelab/error.hpp"

namespace {

constexpr const char* kSpecHelp = R"help(Trace functions are named by a small grammar:
  kl3            Kl_3(x; p)
  psi:2          e(2x/p)
  chi:5          multiplicative character g^j -> e(5j/(p-1))
  ap:3           indicator of x = 3
  sym:2,4        2nd symmetric power of Kl_2(4x)
  prod(A,B)      pointwise product
  scale(3,A)     x -> A(3x)
  inv(5,A)       x -> A(5/x), 0 at 0
Examples: --K kl3   --K "prod(kl2,psi:1)"   --K "inv(2,kl4)")help";

}  // namespace

int main(int argc, char** argv) {
  namespace cli = tracelab::cli;
  CLI::App app{"tracelab: numerical experiments with trace functions and Hecke eigenvalues"};
  app.footer(kSpecHelp);
  app.require_subcommand(1);
  app.fallthrough();

  cli::RunConfig config;
  std::string output = "csv";
  std::string out_file;
  std::vector<std::string> tol_pairs;
  std::string cache_dir;
  app.add_option("--seed", config.seed, "seed for randomized scans")->capture_default_str();
  app.add_option("--cache-dir", cache_dir, "table cache directory (TRACELAB_CACHE wins)");
  app.add_flag("--no-cache", config.no_cache, "do not read or write table caches");
  app.add_option("--p-cap", config.p_cap, "largest prime accepted")->capture_default_str();
  app.add_option("--tol", tol_pairs, "tolerance override name=value (dual6, offdiag, diag, voronoi)");
  app.add_flag("--parallel", config.parallel, "run independent work items on a thread pool");
  app.add_option("--output", output, "report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", out_file, "write the report to a file instead of stdout");

  std::int64_t p = 0;
  int k = 2;
  auto* kl = app.add_subcommand("kloosterman", "Kl_k(n; p) table: n, re, im, abs");
  kl->add_option("--p", p, "prime")->required();
  kl->add_option("--k", k, "rank")->capture_default_str();

  std::string check = "kl2";
  std::int64_t a = 1;
  auto* dual = app.add_subcommand("dual6", "check a GL_6 dual identity; exit 0 iff within tolerance");
  dual->add_option("--p", p, "prime")->required();
  dual->add_option("--check", check, "kl2, psi or ap")->capture_default_str();
  dual->add_option("--a", a, "parameter of psi and ap")->capture_default_str();

  std::string kspec = "kl3", kpspec;
  std::size_t trials = 50;
  auto* corr = app.add_subcommand("correlate", "square-root cancellation scan of corr(Z, Z')");
  corr->add_option("--p", p, "prime")->required();
  corr->add_option("--K", kspec, "trace function spec")->capture_default_str();
  corr->add_option("--Kp", kpspec, "second trace function (default: same as --K)");
  corr->add_option("--trials", trials, "off-diagonal tuples")->capture_default_str();

  double X = 0.0, Z = 1.0;
  std::string window = "plain";
  std::int64_t r_max = 0;
  auto* tw = app.add_subcommand("twisted", "S^t_V(K, X) with its trivial envelope");
  tw->add_option("--p", p, "prime")->required();
  tw->add_option("--K", kspec, "trace function spec")->capture_default_str();
  tw->add_option("--X", X, "length")->required();
  tw->add_option("--Z", Z, "window oscillation parameter")->capture_default_str();
  tw->add_option("--window", window, "plain or oscillated")->capture_default_str();
  tw->add_option("--r-max", r_max, "largest r (0: all)")->capture_default_str();

  std::vector<std::int64_t> primes;
  auto* sc = app.add_subcommand("scaling", "S^t_V(K, p^3) over a list of primes, with fitted slope");
  sc->add_option("--primes", primes, "comma separated primes <= 101")->delimiter(',')->required();
  sc->add_option("--K", kspec, "trace function spec")->capture_default_str();
  sc->add_option("--Z", Z, "window oscillation parameter")->capture_default_str();
  sc->add_option("--window", window, "plain or oscillated")->capture_default_str();

  std::int64_t c = 3, u = 1, tau_n = 1 << 17;
  double vx = 50.0;
  auto* vo = app.add_subcommand("voronoi", "GL_2 Voronoi summation check for Delta");
  vo->add_option("--c", c, "modulus")->capture_default_str();
  vo->add_option("--u", u, "residue coprime to c")->capture_default_str();
  vo->add_option("--X", vx, "length")->capture_default_str();
  vo->add_option("--Z", Z, "window oscillation parameter")->capture_default_str();
  vo->add_option("--window", window, "plain or oscillated")->capture_default_str();
  vo->add_option("--tau-n", tau_n, "initial tau table size")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kOk : cli::kUsage;
  }

  return cli::run_guarded(
      [&]() -> int {
        config.output = output == "json" ? tracelab::report::Format::json
                                         : tracelab::report::Format::csv;
        if (!cache_dir.empty()) config.cache_dir = cache_dir;
        for (const auto& pair : tol_pairs) {
          const auto eq = pair.find('=');
          if (eq == std::string::npos || eq == 0) {
            throw tracelab::Error(tracelab::Errc::bad_param,
                                  "--tol expects name=value, got \"" + pair + "\"");
          }
          try {
            config.tol[pair.substr(0, eq)] = std::stod(pair.substr(eq + 1));
          } catch (const std::exception&) {
            throw tracelab::Error(tracelab::Errc::bad_param, "bad --tol value in \"" + pair + "\"");
          }
        }
        std::ofstream file;
        if (!out_file.empty()) {
          file.open(out_file);
          if (!file) throw tracelab::Error(tracelab::Errc::bad_param, "cannot open " + out_file);
        }
        std::ostream& out = out_file.empty() ? std::cout : file;
        std::ostream& log = std::cerr;

        if (*kl) return cli::cmd_kloosterman(config, p, k, out, log);
        if (*dual) {
          return cli::cmd_dual6(config, p, cli::parse_dual_check(check), a, out, log);
        }
        if (*corr) {
          return cli::cmd_correlate(config, p, kspec, kpspec.empty() ? kspec : kpspec, trials,
                                    out, log);
        }
        if (*tw) {
          return cli::cmd_twisted(config, p, kspec, X, Z, cli::parse_window(window), r_max, out,
                                  log);
        }
        if (*sc) {
          return cli::cmd_scaling(config, primes, kspec, Z, cli::parse_window(window), out, log);
        }
        return cli::cmd_voronoi(config, c, u, vx, Z, cli::parse_window(window), tau_n, out, log);
      },
      std::cerr);
}
