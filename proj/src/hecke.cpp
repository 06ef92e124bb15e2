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

#include "tracelab/hecke.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ntt.hpp"
#include "tracelab/error.hpp"
#include "tracelab/ffield.hpp"
#include "tracelab/rng.hpp"

namespace tracelab {
namespace {

std::vector<std::int32_t> smallest_prime_factors(std::int64_t n) {
  std::vector<std::int32_t> spf(static_cast<std::size_t>(n + 1), 0);
  for (std::int64_t i = 2; i <= n; ++i) {
    if (spf[static_cast<std::size_t>(i)] != 0) continue;
    for (std::int64_t j = i; j <= n; j += i) {
      if (spf[static_cast<std::size_t>(j)] == 0) spf[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
    }
  }
  return spf;
}

// h_0..h_k for Satake parameters {a^2, 1, a^-2}: e1 = e2 = t, e3 = 1.
std::vector<double> complete_symmetric(double t, int k) {
  std::vector<double> h(static_cast<std::size_t>(k + 1), 0.0);
  h[0] = 1.0;
  for (int i = 1; i <= k; ++i) {
    const double h1 = h[static_cast<std::size_t>(i - 1)];
    const double h2 = i >= 2 ? h[static_cast<std::size_t>(i - 2)] : 0.0;
    const double h3 = i >= 3 ? h[static_cast<std::size_t>(i - 3)] : 0.0;
    h[static_cast<std::size_t>(i)] = t * h1 - t * h2 + h3;
  }
  return h;
}

// E^2 for E = sum_k (-1)^k (2k+1) q^{k(k+1)/2}, truncated to `len` terms.
std::vector<std::int64_t> jacobi_squared(std::size_t len) {
  std::vector<std::pair<std::size_t, std::int64_t>> terms;
  for (std::int64_t k = 0;; ++k) {
    const auto e = static_cast<std::size_t>(k * (k + 1) / 2);
    if (e >= len) break;
    terms.emplace_back(e, (k % 2 == 0 ? 1 : -1) * (2 * k + 1));
  }
  std::vector<std::int64_t> sq(len, 0);
  for (const auto& [ea, ca] : terms) {
    for (const auto& [eb, cb] : terms) {
      if (ea + eb >= len) break;
      sq[ea + eb] += ca * cb;
    }
  }
  return sq;
}

}  // namespace

void HeckeGL2::normalize() {
  lam.assign(tau.size(), 0.0);
  for (std::size_t n = 1; n < tau.size(); ++n) {
    lam[n] = tau[n].convert_to<double>() / std::pow(static_cast<double>(n), 5.5);
  }
}

HeckeGL2 tau_table(std::int64_t N) {
  if (N < 0) throw Error(Errc::bad_param, "tau table size must be >= 0");
  if (N > kTauCap) {
    throw Error(Errc::too_large, "tau table size " + std::to_string(N) + " exceeds cap " +
                                     std::to_string(kTauCap));
  }
  HeckeGL2 out;
  out.N = N;
  out.tau.assign(static_cast<std::size_t>(N + 1), BigInt(0));
  if (N == 0) {
    out.normalize();
    return out;
  }
  const auto len = static_cast<std::size_t>(N);
  const auto e2 = jacobi_squared(len);
  const auto& mods = ntt::moduli();

  std::vector<std::vector<std::uint32_t>> residues;
  for (const auto& m : mods) {
    std::vector<std::uint32_t> a(len);
    for (std::size_t i = 0; i < len; ++i) {
      a[i] = static_cast<std::uint32_t>(arith::mod(e2[i], m.p));
    }
    a = ntt::square_truncated(a, len, m);
    residues.push_back(ntt::square_truncated(a, len, m));
  }

  // Garner: x = d0 + p0 (d1 + p1 (d2 + ...)), digits in [0, p_i).
  const std::size_t r = mods.size();
  std::vector<std::vector<std::uint64_t>> prefix(r, std::vector<std::uint64_t>(r, 1));
  std::vector<std::uint64_t> prefix_inv(r, 1);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 1; j <= i; ++j) {
      prefix[i][j] = prefix[i][j - 1] * mods[j - 1].p % mods[i].p;  // (p_0..p_{j-1}) mod p_i
    }
    prefix_inv[i] = static_cast<std::uint64_t>(arith::inverse_mod(
        static_cast<std::int64_t>(prefix[i][i]), mods[i].p));
  }
  BigInt modulus = 1;
  for (const auto& m : mods) modulus *= m.p;
  const BigInt half = modulus / 2;

  std::vector<std::uint64_t> digit(r);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const std::uint64_t p = mods[j].p;
      std::uint64_t partial = 0;
      for (std::size_t l = 0; l < j; ++l) partial = (partial + digit[l] * prefix[j][l]) % p;
      digit[j] = (residues[j][i] + p - partial) % p * prefix_inv[j] % p;
    }
    BigInt x = 0;
    for (std::size_t j = r; j-- > 0;) x = x * mods[j].p + digit[j];
    if (x > half) x -= modulus;
    out.tau[i + 1] = x;
  }
  out.normalize();
  return out;
}

HeckeGL3::HeckeGL3(std::shared_ptr<const HeckeGL2> gl2, std::int64_t bound)
    : gl2_(std::move(gl2)), bound_(bound) {
  if (!gl2_) throw Error(Errc::bad_param, "HeckeGL3 needs a GL_2 table");
  if (bound < 1) throw Error(Errc::bad_param, "GL_3 bound must be >= 1");
  if (bound > kTauCap) throw Error(Errc::too_large, "GL_3 bound exceeds " + std::to_string(kTauCap));
  if (gl2_->N < bound) {
    throw Error(Errc::table_too_small, "GL_2 table of size " + std::to_string(gl2_->N) +
                                           " cannot support GL_3 bound " + std::to_string(bound));
  }
  spf_ = smallest_prime_factors(gl2_->N);

  std::vector<double> first(static_cast<std::size_t>(bound + 1), 0.0);
  first[1] = 1.0;
  for (std::int64_t n = 2; n <= bound; ++n) {
    const std::int64_t p = spf_[static_cast<std::size_t>(n)];
    std::int64_t m = n;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    first[static_cast<std::size_t>(n)] =
        first[static_cast<std::size_t>(m)] * complete_symmetric(at_prime(p), e).back();
  }
  rows_.emplace_back();  // r = 0
  rows_.push_back(std::move(first));
  for (std::int64_t r = 2; r * r <= bound; ++r) {
    std::vector<double> row(static_cast<std::size_t>(bound / (r * r) + 1), 0.0);
    for (std::size_t n = 1; n < row.size(); ++n) row[n] = eval(r, static_cast<std::int64_t>(n));
    rows_.push_back(std::move(row));
  }
}

HeckeGL3::HeckeGL3(std::shared_ptr<const HeckeGL2> gl2, std::int64_t bound,
                   std::vector<std::vector<double>> rows)
    : gl2_(std::move(gl2)), bound_(bound), rows_(std::move(rows)) {
  if (!gl2_ || gl2_->N < bound) throw Error(Errc::table_too_small, "GL_2 table too small");
  bool ok = rows_.size() >= 2 && rows_[0].empty();
  for (std::size_t r = 1; ok && r < rows_.size(); ++r) {
    ok = rows_[r].size() == static_cast<std::size_t>(bound / static_cast<std::int64_t>(r * r) + 1);
  }
  ok = ok && static_cast<std::int64_t>((rows_.size()) * (rows_.size())) > bound &&
       static_cast<std::int64_t>((rows_.size() - 1) * (rows_.size() - 1)) <= bound;
  if (!ok) throw Error(Errc::cache_corrupt, "GL_3 rows do not match bound " + std::to_string(bound));
  spf_ = smallest_prime_factors(gl2_->N);
}

double HeckeGL3::at_prime(std::int64_t p) const {
  const double l = gl2_->lam.at(static_cast<std::size_t>(p));
  return l * l - 1.0;
}

double HeckeGL3::operator()(std::int64_t r, std::int64_t n) const {
  if (r < 1 || n < 1 || r * r * n > bound_) {
    throw Error(Errc::out_of_range, "lambda(" + std::to_string(r) + ", " + std::to_string(n) +
                                        ") is outside the table bound " + std::to_string(bound_));
  }
  return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)];
}

double HeckeGL3::prime_power_pair(std::int64_t p, int a, int b) const {
  const auto h = complete_symmetric(at_prime(p), a + b + 1);
  auto at = [&](int i) { return i < 0 ? 0.0 : h[static_cast<std::size_t>(i)]; };
  return at(a + b) * at(a) - at(a + b + 1) * at(a - 1);
}

double HeckeGL3::eval(std::int64_t r, std::int64_t n) const {
  if (r < 1 || n < 1 || r > gl2_->N || n > gl2_->N) {
    throw Error(Errc::out_of_range, "lambda(" + std::to_string(r) + ", " + std::to_string(n) +
                                        ") needs lambda_f beyond N = " + std::to_string(gl2_->N));
  }
  double value = 1.0;
  while (r > 1 || n > 1) {
    const std::int64_t pr = r > 1 ? spf_[static_cast<std::size_t>(r)] : 0;
    const std::int64_t pn = n > 1 ? spf_[static_cast<std::size_t>(n)] : 0;
    const std::int64_t p = pr == 0 ? pn : (pn == 0 ? pr : std::min(pr, pn));
    int a = 0, b = 0;
    while (r % p == 0) {
      r /= p;
      ++a;
    }
    while (n % p == 0) {
      n /= p;
      ++b;
    }
    value *= prime_power_pair(p, a, b);
  }
  return value;
}

double HeckeGL3::eval_moebius(std::int64_t r, std::int64_t n) const {
  const std::int64_t g = std::gcd(r, n);
  double total = 0.0;
  for (std::int64_t d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    const int mu = arith::moebius(d);
    if (mu == 0) continue;
    // Self-duality of Sym^2: lambda(r, 1) = lambda(1, r).
    total += mu * eval(1, r / d) * eval(1, n / d);
  }
  return total;
}

RsRatios rs_partial(const HeckeGL3& table, std::int64_t X) {
  if (X < 1 || X > table.gl2().N || X > table.bound()) {
    throw Error(Errc::out_of_range, "rs_partial X = " + std::to_string(X) + " exceeds the tables");
  }
  RsRatios out;
  const double x = static_cast<double>(X);
  for (std::int64_t n = 1; n <= X; ++n) {
    const double l = table.gl2().lam[static_cast<std::size_t>(n)];
    out.gl2 += l * l;
  }
  // lambda(n, m) = lambda(m, n) for a self-dual form; row m holds lambda(m, .).
  for (std::int64_t m = 1; m * m <= X; ++m) {
    for (std::int64_t n = 1; m * m * n <= X; ++n) {
      const double l = table(m, n);
      out.gl3 += l * l * static_cast<double>(m);
    }
  }
  out.gl2 /= x;
  out.gl3 /= x;
  return out;
}

HeckeAudit audit_gl2(const HeckeGL2& t) {
  HeckeAudit out;
  const std::int64_t N = t.N;
  auto tau = [&](std::int64_t n) -> const BigInt& { return t.tau[static_cast<std::size_t>(n)]; };
  for (std::int64_t m = 2; m * m <= N; ++m) {
    for (std::int64_t n = m + 1; m * n <= N; ++n) {
      if (std::gcd(m, n) != 1) continue;
      ++out.checked_pairs;
      if (tau(m * n) != tau(m) * tau(n)) ++out.multiplicativity;
    }
  }
  const auto spf = smallest_prime_factors(N);
  for (std::int64_t p = 2; p * p <= N; ++p) {
    if (spf[static_cast<std::size_t>(p)] != p) continue;
    BigInt p11 = 1;
    for (int i = 0; i < 11; ++i) p11 *= p;
    for (std::int64_t prev = 1, cur = p; cur * p <= N; prev = cur, cur *= p) {
      if (tau(cur * p) != tau(p) * tau(cur) - p11 * tau(prev)) ++out.prime_power_recursion;
    }
  }
  for (std::int64_t n = 1; n <= N; ++n) {
    std::int64_t d = 1, m = n;
    while (m > 1) {
      const std::int64_t p = spf[static_cast<std::size_t>(m)];
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      d *= e + 1;
    }
    if (std::abs(t.lam[static_cast<std::size_t>(n)]) > static_cast<double>(d) * (1.0 + 1e-12)) {
      ++out.deligne;
    }
  }
  return out;
}

Gl3Audit audit_gl3(const HeckeGL3& t, std::int64_t limit, std::size_t samples,
                   std::uint64_t seed) {
  Gl3Audit out;
  std::vector<std::vector<std::int64_t>> divisors(static_cast<std::size_t>(limit + 1));
  for (std::int64_t d = 1; d <= limit; ++d) {
    for (std::int64_t k = d; k <= limit; k += d) divisors[static_cast<std::size_t>(k)].push_back(d);
  }
  for (std::int64_t m = 1; m <= limit; ++m) {
    const double lm = t.eval(1, m);
    for (std::int64_t r = 1; m * r * r <= limit; ++r) {
      for (std::int64_t n = 1; m * r * r * n <= limit; ++n) {
        const double lhs = lm * t.eval(r, n);
        double rhs = 0.0;
        for (const auto d1 : divisors[static_cast<std::size_t>(m)]) {
          if (r % d1 != 0) continue;
          for (const auto d2 : divisors[static_cast<std::size_t>(m / d1)]) {
            if (n % d2 != 0) continue;
            const std::int64_t d0 = m / (d1 * d2);
            rhs += t.eval(r * d2 / d1, n * d0 / d2);
          }
        }
        out.hecke_relation = std::max(out.hecke_relation, std::abs(lhs - rhs));
        ++out.triples;
      }
    }
  }
  const auto& rows = t.rows();
  for (std::size_t r = 1; r < rows.size(); ++r) {
    for (std::size_t n = 1; n < rows[r].size(); ++n) {
      const double swapped = t.eval(static_cast<std::int64_t>(n), static_cast<std::int64_t>(r));
      out.self_duality = std::max(out.self_duality, std::abs(rows[r][n] - swapped));
    }
  }
  const auto N = t.gl2().N;
  for (std::int64_t p = 2; p <= N; ++p) {
    if (arith::is_prime(p)) out.max_abs_at_prime = std::max(out.max_abs_at_prime, std::abs(t.at_prime(p)));
  }
  SplitMix64 rng(seed, 0x6C33);
  const std::int64_t rmax = static_cast<std::int64_t>(std::sqrt(static_cast<double>(t.bound())));
  for (std::size_t i = 0; i < samples; ++i) {
    const std::int64_t r = rng.uniform(1, std::max<std::int64_t>(1, rmax));
    const std::int64_t nmax = std::max<std::int64_t>(1, t.bound() / (r * r));
    const std::int64_t n = rng.uniform(1, nmax);
    out.route_gap = std::max(out.route_gap, std::abs(t.eval(r, n) - t.eval_moebius(r, n)));
  }
  return out;
}

}  // namespace tracelab
