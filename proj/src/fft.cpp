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

#include "tracelab/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace tracelab::fft {
namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

// In-place radix-2 transform; twiddles are computed directly per index rather
// than by repeated multiplication to keep the error O(eps log n).
void radix2(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<cplx> tw(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double ang = sign * 2.0 * std::numbers::pi * static_cast<double>(k) /
                       static_cast<double>(n);
    tw[k] = {std::cos(ang), std::sin(ang)};
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const cplx u = a[i + k];
        const cplx v = a[i + k + half] * tw[k * stride];
        a[i + k] = u + v;
        a[i + k + half] = u - v;
      }
    }
  }
}

std::vector<cplx> naive(std::span<const cplx> in, int sign) {
  const std::size_t n = in.size();
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      acc += in[j] * arith::unit_root(sign * static_cast<std::int64_t>(j * k % n),
                                      static_cast<std::int64_t>(n));
    }
    out[k] = acc;
  }
  return out;
}

std::vector<cplx> bluestein(std::span<const cplx> in, int sign) {
  const std::size_t n = in.size();
  const std::size_t m = next_pow2(2 * n - 1);
  // chirp[j] = exp(sign * pi i j^2 / n); j^2 is reduced mod 2n exactly.
  std::vector<cplx> chirp(n);
  const auto two_n = static_cast<std::int64_t>(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto jj = static_cast<std::int64_t>(j);
    chirp[j] = arith::unit_root(sign * (jj * jj % two_n), two_n);
  }
  std::vector<cplx> a(m, 0.0), b(m, 0.0);
  for (std::size_t j = 0; j < n; ++j) a[j] = in[j] * chirp[j];
  b[0] = std::conj(chirp[0]);
  for (std::size_t j = 1; j < n; ++j) {
    b[j] = std::conj(chirp[j]);
    b[m - j] = std::conj(chirp[j]);
  }
  radix2(a, -1);
  radix2(b, -1);
  for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
  radix2(a, +1);
  const double scale = 1.0 / static_cast<double>(m);
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * scale * chirp[k];
  return out;
}

}  // namespace

std::vector<cplx> dft(std::span<const cplx> in, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("dft: sign must be +1 or -1");
  const std::size_t n = in.size();
  if (n <= 16) return naive(in, sign);
  if (is_pow2(n)) {
    std::vector<cplx> a(in.begin(), in.end());
    radix2(a, sign);
    return a;
  }
  return bluestein(in, sign);
}

std::vector<cplx> cyclic_convolve(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw std::invalid_argument("cyclic_convolve: length mismatch");
  const std::size_t n = a.size();
  if (n == 0) return {};
  auto fa = dft(a, -1);
  const auto fb = dft(b, -1);
  for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
  auto out = dft(fa, +1);
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& v : out) v *= scale;
  return out;
}

}  // namespace tracelab::fft
