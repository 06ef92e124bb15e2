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

#include "tracelab/ffield.hpp"

#include <cmath>
#include <string>

#include "tracelab/error.hpp"

namespace tracelab {
namespace arith {

std::int64_t gcd(std::int64_t a, std::int64_t b) noexcept {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) noexcept {
  return static_cast<std::int64_t>(
      static_cast<__int128>(mod(a, m)) * mod(b, m) % m);
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m) noexcept {
  std::int64_t result = 1 % m;
  base = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = mod(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    throw Error(Errc::zero_inverse, std::to_string(a) + " is not invertible modulo " +
                                        std::to_string(m));
  }
  return mod(old_s, m);
}

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

int moebius(std::int64_t n) {
  int sign = 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      sign = -sign;
    }
  }
  return n > 1 ? -sign : sign;
}

cplx unit_root(std::int64_t num, std::int64_t den) noexcept {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod(num, den)) /
                       static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace arith

namespace {

std::int64_t smallest_primitive_root(std::int64_t p) {
  if (p == 2) return 1;
  const auto factors = arith::prime_factors(p - 1);
  for (std::int64_t g = 2; g < p; ++g) {
    bool primitive = true;
    for (const auto q : factors) {
      if (arith::powmod(g, (p - 1) / q, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  return 1;  // unreachable for prime p
}

}  // namespace

PrimeField::PrimeField(std::int64_t p, std::int64_t cap) : p_(p) {
  if (!arith::is_prime(p)) {
    throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  }
  if (p > cap) {
    throw Error(Errc::too_large,
                std::to_string(p) + " exceeds the field cap " + std::to_string(cap));
  }
  g_ = smallest_primitive_root(p);
  sqrt_p_ = std::sqrt(static_cast<double>(p));

  const auto n = static_cast<std::size_t>(p);
  powers_.resize(n - 1);
  dlog_.assign(n, -1);
  std::int64_t x = 1;
  for (std::int64_t j = 0; j < p - 1; ++j) {
    powers_[static_cast<std::size_t>(j)] = x;
    dlog_[static_cast<std::size_t>(x)] = j;
    x = x * g_ % p;
  }
  // inv(g^j) = g^{-j}
  inv_.assign(n, 0);
  for (std::int64_t j = 0; j < p - 1; ++j) {
    inv_[static_cast<std::size_t>(powers_[static_cast<std::size_t>(j)])] =
        powers_[static_cast<std::size_t>(arith::mod(-j, p - 1))];
  }

  additive_.resize(n);
  for (std::int64_t a = 0; a < p; ++a) additive_[static_cast<std::size_t>(a)] = arith::unit_root(a, p);
  order_roots_.resize(n - 1);
  for (std::int64_t a = 0; a < p - 1; ++a) {
    order_roots_[static_cast<std::size_t>(a)] = arith::unit_root(a, p - 1);
  }
}

std::int64_t PrimeField::inv(std::int64_t x) const {
  const auto r = reduce(x);
  if (r == 0) throw Error(Errc::zero_inverse, "0 has no inverse modulo " + std::to_string(p_));
  return inv_[static_cast<std::size_t>(r)];
}

std::int64_t PrimeField::dlog(std::int64_t x) const {
  const auto r = reduce(x);
  if (r == 0) throw Error(Errc::zero_log, "discrete log of 0 modulo " + std::to_string(p_));
  return dlog_[static_cast<std::size_t>(r)];
}

FieldPtr make_field(std::int64_t p, std::int64_t cap) {
  return std::make_shared<const PrimeField>(p, cap);
}

}  // namespace tracelab
