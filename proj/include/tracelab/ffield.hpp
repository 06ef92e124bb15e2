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

#include <complex>
#include <cstdint>
#include <memory>
#include <numbers>
#include <span>
#include <vector>

namespace tracelab {

using cplx = std::complex<double>;

inline constexpr std::int64_t kDefaultFieldCap = 1'000'000;

// Integer helpers shared by the prime-field code and the composite-modulus
// Kloosterman sums.
namespace arith {

/// Least non-negative residue of a modulo m (m >= 1).
constexpr std::int64_t mod(std::int64_t a, std::int64_t m) noexcept {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept;
std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) noexcept;
std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m) noexcept;

/// Inverse of a modulo m >= 1; throws Error(ZeroInverse) if gcd(a, m) != 1.
/// Modulo 1 every integer is a unit and the inverse is 0.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

bool is_prime(std::int64_t n) noexcept;

/// Distinct prime divisors of n >= 1 in increasing order.
std::vector<std::int64_t> prime_factors(std::int64_t n);

/// Möbius function.
int moebius(std::int64_t n);

/// exp(2 pi i num / den) with num reduced first, so large numerators keep
/// full accuracy.
cplx unit_root(std::int64_t num, std::int64_t den) noexcept;

}  // namespace arith

/// Arithmetic in F_p with dense tables: inverses, discrete logarithms to the
/// smallest primitive root, and additive characters e(a/p). Immutable after
/// construction and safe to share between threads.
class PrimeField {
 public:
  explicit PrimeField(std::int64_t p, std::int64_t cap = kDefaultFieldCap);

  std::int64_t p() const noexcept { return p_; }
  /// Order of the multiplicative group, p - 1.
  std::int64_t order() const noexcept { return p_ - 1; }
  std::int64_t generator() const noexcept { return g_; }
  double sqrt_p() const noexcept { return sqrt_p_; }

  std::int64_t reduce(std::int64_t a) const noexcept { return arith::mod(a, p_); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const noexcept {
    return reduce(reduce(a) * reduce(b));
  }

  std::int64_t inv(std::int64_t x) const;
  std::int64_t dlog(std::int64_t x) const;
  /// g^j mod p for any integer j.
  std::int64_t exp_g(std::int64_t j) const noexcept {
    return powers_[static_cast<std::size_t>(arith::mod(j, p_ - 1))];
  }

  /// e(a/p) = exp(2 pi i a / p).
  cplx e(std::int64_t a) const noexcept {
    return additive_[static_cast<std::size_t>(reduce(a))];
  }
  /// exp(2 pi i a / (p - 1)); the values of multiplicative characters.
  cplx e_order(std::int64_t a) const noexcept {
    return order_roots_[static_cast<std::size_t>(arith::mod(a, p_ - 1))];
  }

  std::span<const cplx> additive_roots() const noexcept { return additive_; }
  std::span<const std::int64_t> inverse_table() const noexcept { return inv_; }
  std::span<const std::int64_t> dlog_table() const noexcept { return dlog_; }

 private:
  std::int64_t p_;
  std::int64_t g_;
  double sqrt_p_;
  std::vector<std::int64_t> inv_;
  std::vector<std::int64_t> dlog_;
  std::vector<std::int64_t> powers_;
  std::vector<cplx> additive_;
  std::vector<cplx> order_roots_;
};

using FieldPtr = std::shared_ptr<const PrimeField>;

/// Throws NotPrime for composite p (or p < 2) and TooLarge when p > cap.
FieldPtr make_field(std::int64_t p, std::int64_t cap = kDefaultFieldCap);

}  // namespace tracelab
