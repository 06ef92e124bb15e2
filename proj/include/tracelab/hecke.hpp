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
#include <memory>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tracelab {

/// |tau(n)| < 2^138 for n <= 10^7, so a checked 256-bit integer is exact and
/// any overflow throws instead of wrapping.
using BigInt = boost::multiprecision::checked_int256_t;

inline constexpr std::int64_t kTauCap = 10'000'000;

/// Kim-Sarnak exponent toward Ramanujan on GL_3; carried as metadata only.
inline constexpr double kTheta3 = 5.0 / 14.0;

/// Eigenvalues of Delta (weight 12, level 1): tau(n) exactly and the
/// normalized lambda_f(n) = tau(n) / n^{11/2}. Index 0 is unused.
struct HeckeGL2 {
  std::int64_t N = 0;
  std::vector<BigInt> tau;
  std::vector<double> lam;

  /// Rebuilds lam from tau.
  void normalize();
};

/// tau(n) for n <= N from Delta = q E^8, E = prod (1 - q^n)^3
/// = sum_k (-1)^k (2k+1) q^{k(k+1)/2}; E^2 exactly, then two squarings by NTT
/// modulo five primes and CRT. Throws TooLarge above kTauCap.
HeckeGL2 tau_table(std::int64_t N);

/// Sym^2 Delta on GL_3. lambda(r, n) for r^2 n <= bound is stored densely;
/// eval() handles any r, n <= gl2 range from Satake parameters.
class HeckeGL3 {
 public:
  HeckeGL3(std::shared_ptr<const HeckeGL2> gl2, std::int64_t bound);
  /// Adopts precomputed rows (from the cache); throws CacheCorrupt if their
  /// shape does not match `bound`.
  HeckeGL3(std::shared_ptr<const HeckeGL2> gl2, std::int64_t bound,
           std::vector<std::vector<double>> rows);

  std::int64_t bound() const noexcept { return bound_; }
  const HeckeGL2& gl2() const noexcept { return *gl2_; }

  /// Table lookup; throws OutOfRange when r^2 n > bound.
  double operator()(std::int64_t r, std::int64_t n) const;

  /// Multiplicativity over prime-power pairs with the Jacobi-Trudi form
  /// lambda(p^a, p^b) = h_{a+b} h_a - h_{a+b+1} h_{a-1}.
  double eval(std::int64_t r, std::int64_t n) const;

  /// sum_{d | (r,n)} mu(d) lambda(r/d, 1) lambda(1, n/d).
  double eval_moebius(std::int64_t r, std::int64_t n) const;

  /// lambda(1, p) = lambda_f(p)^2 - 1.
  double at_prime(std::int64_t p) const;

  /// Raw table rows, row r holds n = 0..bound / r^2 (index 0 unused).
  const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }

 private:
  double prime_power_pair(std::int64_t p, int a, int b) const;

  std::shared_ptr<const HeckeGL2> gl2_;
  std::int64_t bound_;
  std::vector<std::int32_t> spf_;  // smallest prime factor up to gl2 N
  std::vector<std::vector<double>> rows_;
};

/// sum_{n <= X} |lambda_f(n)|^2 / X and sum_{m^2 n <= X} |lambda(n, m)|^2 m / X.
struct RsRatios {
  double gl2 = 0.0;
  double gl3 = 0.0;
};

/// Throws OutOfRange if X exceeds either table.
RsRatios rs_partial(const HeckeGL3& table, std::int64_t X);

/// Exhaustive invariant checks; each returns the number of violations.
struct HeckeAudit {
  std::size_t multiplicativity = 0;     // tau(mn) = tau(m) tau(n), (m,n) = 1, mn <= N
  std::size_t prime_power_recursion = 0;
  std::size_t deligne = 0;              // |lambda_f(n)| <= d(n)
  std::size_t checked_pairs = 0;
};

HeckeAudit audit_gl2(const HeckeGL2& table);

struct Gl3Audit {
  double hecke_relation = 0.0;   // max |lhs - rhs| over m r^2 n <= limit
  std::size_t triples = 0;
  double self_duality = 0.0;     // max |lambda(r,n) - lambda(n,r)|
  double max_abs_at_prime = 0.0; // max_p |lambda(1, p)|
  double route_gap = 0.0;        // eval vs eval_moebius over sampled pairs
};

/// Hecke relation lambda(1,m) lambda(r,n) = sum_{d0 d1 d2 = m, d1 | r, d2 | n}
/// lambda(r d2 / d1, n d0 / d2) over every triple with m r^2 n <= limit, and
/// the two-route comparison over `samples` seeded pairs.
Gl3Audit audit_gl3(const HeckeGL3& table, std::int64_t limit, std::size_t samples,
                   std::uint64_t seed);

}  // namespace tracelab
