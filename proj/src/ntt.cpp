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

#include "ntt.hpp"

#include <bit>
#include <utility>

#include "tracelab/error.hpp"
#include "tracelab/ffield.hpp"

namespace tracelab::ntt {
namespace {

std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t power(std::uint32_t b, std::uint64_t e, std::uint32_t p) {
  return static_cast<std::uint32_t>(arith::powmod(b, static_cast<std::int64_t>(e), p));
}

std::uint32_t smallest_root(std::uint32_t p) {
  const auto factors = arith::prime_factors(p - 1);
  for (std::uint32_t g = 2;; ++g) {
    bool ok = true;
    for (const auto q : factors) ok = ok && power(g, (p - 1) / static_cast<std::uint64_t>(q), p) != 1;
    if (ok) return g;
  }
}

}  // namespace

const std::vector<Modulus>& moduli() {
  static const std::vector<Modulus> table = [] {
    std::vector<Modulus> out;
    for (const std::uint32_t p : {2013265921u, 1811939329u, 469762049u, 167772161u, 2113929217u}) {
      out.push_back({p, smallest_root(p)});
    }
    return out;
  }();
  return table;
}

void transform(std::vector<std::uint32_t>& a, const Modulus& m, bool inverse) {
  const std::size_t n = a.size();
  if (!std::has_single_bit(n) || (m.p - 1) % n != 0) {
    throw Error(Errc::bad_param, "NTT length must be a power of two dividing p - 1");
  }
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint32_t w = power(m.root, (m.p - 1) / len, m.p);
    if (inverse) w = power(w, m.p - 2, m.p);
    std::vector<std::uint32_t> tw(len / 2);
    tw[0] = 1;
    for (std::size_t i = 1; i < len / 2; ++i) tw[i] = mul(tw[i - 1], w, m.p);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::uint32_t u = a[i + j];
        const std::uint32_t v = mul(a[i + j + len / 2], tw[j], m.p);
        a[i + j] = u + v >= m.p ? u + v - m.p : u + v;
        a[i + j + len / 2] = u >= v ? u - v : u + m.p - v;
      }
    }
  }
  if (inverse) {
    const std::uint32_t n_inv = power(static_cast<std::uint32_t>(n % m.p), m.p - 2, m.p);
    for (auto& x : a) x = mul(x, n_inv, m.p);
  }
}

std::vector<std::uint32_t> square_truncated(const std::vector<std::uint32_t>& a, std::size_t keep,
                                            const Modulus& m) {
  const std::size_t needed = std::min(keep, 2 * a.size() - 1);
  std::vector<std::uint32_t> buf(std::bit_ceil(std::max<std::size_t>(2 * a.size() - 1, 1)), 0);
  std::copy(a.begin(), a.end(), buf.begin());
  transform(buf, m, false);
  for (auto& x : buf) x = mul(x, x, m.p);
  transform(buf, m, true);
  buf.resize(needed);
  buf.resize(keep, 0);
  return buf;
}

}  // namespace tracelab::ntt
