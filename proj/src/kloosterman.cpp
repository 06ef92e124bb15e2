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

#include "tracelab/kloosterman.hpp"

#include <cmath>
#include <string>

#include "tracelab/error.hpp"

namespace tracelab {

TraceFn KloostermanTable::trace() const {
  return TraceFn(field, values, "kl" + std::to_string(k));
}

namespace {

constexpr std::int64_t kDirectThreshold = 1024;

std::vector<cplx> kl_step_direct(const PrimeField& f, const std::vector<cplx>& prev) {
  const std::int64_t p = f.p();
  std::vector<cplx> next(prev.size());
  for (std::int64_t a = 0; a < p; ++a) {
    cplx acc = 0.0;
    for (std::int64_t x = 1; x < p; ++x) {
      acc += f.e(x) * prev[static_cast<std::size_t>(f.mul(a, f.inv(x)))];
    }
    next[static_cast<std::size_t>(a)] = acc / f.sqrt_p();
  }
  return next;
}

std::vector<cplx> kl_step_fast(const FieldPtr& field, const std::vector<cplx>& prev) {
  const TraceFn psi(field, std::vector<cplx>(field->additive_roots().begin(),
                                             field->additive_roots().end()),
                    "psi");
  const TraceFn prev_fn(field, prev, "kl");
  const auto conv = mconv(psi, prev_fn);
  std::vector<cplx> next(conv.values().begin(), conv.values().end());
  // sum_{x != 0} e(x/p) = -1
  next[0] = -prev[0] / field->sqrt_p();
  return next;
}

void check_sign(int sign) {
  if (sign != 1 && sign != -1) throw Error(Errc::bad_param, "sign must be +1 or -1");
}

}  // namespace

KloostermanTable kl_all(int k, const FieldPtr& field, KlMethod method) {
  if (k < 1) throw Error(Errc::bad_param, "Kloosterman rank must be >= 1");
  const auto& f = *field;
  std::vector<cplx> values(f.additive_roots().begin(), f.additive_roots().end());
  const bool direct = method == KlMethod::direct ||
                      (method == KlMethod::automatic && f.p() <= kDirectThreshold);
  for (int step = 2; step <= k; ++step) {
    values = direct ? kl_step_direct(f, values) : kl_step_fast(field, values);
  }
  return {field, k, std::move(values)};
}

cplx kl_brute(int k, std::int64_t n, const PrimeField& f) {
  if (k < 1) throw Error(Errc::bad_param, "Kloosterman rank must be >= 1");
  if (k > 4 || f.p() > 31) {
    throw Error(Errc::oracle_too_large, "kl_brute is limited to k <= 4 and p <= 31");
  }
  const std::int64_t p = f.p();
  const std::int64_t target = f.reduce(n);
  // Odometer over (x_1, ..., x_{k-1}) in (F_p^x)^{k-1}.
  std::vector<std::int64_t> xs(static_cast<std::size_t>(k - 1), 1);
  cplx total = 0.0;
  while (true) {
    std::int64_t prod = 1, sum = 0;
    for (const auto x : xs) {
      prod = f.mul(prod, x);
      sum += x;
    }
    const std::int64_t last = f.mul(target, f.inv(prod));
    total += f.e(sum + last);
    std::size_t i = 0;
    while (i < xs.size() && xs[i] == p - 1) xs[i++] = 1;
    if (i == xs.size()) break;
    ++xs[i];
  }
  return total / std::pow(f.sqrt_p(), k - 1);
}

cplx kloosterman_s(std::int64_t m, std::int64_t n, std::int64_t c) {
  if (c < 1) throw Error(Errc::bad_param, "Kloosterman modulus must be >= 1");
  cplx total = 0.0;
  for (std::int64_t x = 0; x < c; ++x) {
    if (arith::gcd(x, c) != 1) continue;
    const std::int64_t xbar = arith::inverse_mod(x, c);
    const std::int64_t phase =
        arith::mod(arith::mulmod(m, x, c) + arith::mulmod(n, xbar, c), c);
    total += arith::unit_root(phase, c);
  }
  return total;
}

namespace {

struct MSumModuli {
  std::int64_t inner;  // rc / n1
};

MSumModuli validate(const MSumParams& s) {
  check_sign(s.sign);
  if (s.c < 1 || s.r < 1 || s.n1 < 1) throw Error(Errc::bad_param, "c, r, n1 must be >= 1");
  if ((s.r * s.c) % s.n1 != 0) {
    throw Error(Errc::bad_divisibility,
                "n1 = " + std::to_string(s.n1) + " does not divide rc = " +
                    std::to_string(s.r * s.c));
  }
  const std::int64_t inner = s.r * s.c / s.n1;
  if (s.c > 10'000 || inner > 10'000) throw Error(Errc::bad_param, "moduli above 10^4");
  if (arith::gcd(s.ell, s.c) != 1) throw Error(Errc::bad_param, "(l, c) must be 1");
  if (arith::gcd(s.q, s.c) != 1 || arith::gcd(s.q, inner) != 1) {
    throw Error(Errc::bad_param, "q must be coprime to c and rc/n1");
  }
  return {inner};
}

}  // namespace

cplx m_sum_direct(const MSumParams& s) {
  const auto [inner] = validate(s);
  const std::int64_t ell_bar = arith::inverse_mod(s.ell, s.c);
  const std::int64_t q_bar_inner = arith::inverse_mod(s.q, inner);
  const std::int64_t second = arith::mod(s.sign * arith::mulmod(q_bar_inner, s.n, inner), inner);
  cplx total = 0.0;
  for (std::int64_t u = 0; u < s.c; ++u) {
    if (arith::gcd(u, s.c) != 1) continue;
    const std::int64_t w = arith::inverse_mod(arith::mulmod(s.q, u, s.c), s.c);
    const std::int64_t phase =
        arith::mod(s.sign * arith::mulmod(arith::mulmod(w, ell_bar, s.c), s.m, s.c), s.c);
    const std::int64_t first = arith::mulmod(s.r, w, inner);
    total += arith::unit_root(phase, s.c) * kloosterman_s(first, second, inner);
  }
  return total;
}

cplx m_sum_formula(const MSumParams& s) {
  const auto [inner] = validate(s);
  const std::int64_t q_bar_inner = arith::inverse_mod(s.q, inner);
  const std::int64_t coeff = arith::mod(s.sign * arith::mulmod(q_bar_inner, s.n, inner), inner);
  cplx total = 0.0;
  for (std::int64_t d = 1; d <= s.c; ++d) {
    if (s.c % d != 0) continue;
    const int mu = arith::moebius(s.c / d);
    if (mu == 0) continue;
    cplx sub = 0.0;
    for (std::int64_t x = 0; x < inner; ++x) {
      if (arith::gcd(x, inner) != 1) continue;
      // l n1 x = -sign m (mod d)
      const std::int64_t lhs = arith::mod(
          arith::mulmod(arith::mulmod(s.ell, s.n1, d), x, d) + s.sign * arith::mod(s.m, d), d);
      if (lhs != 0) continue;
      const std::int64_t xbar = arith::inverse_mod(x, inner);
      sub += arith::unit_root(arith::mulmod(coeff, xbar, inner), inner);
    }
    total += static_cast<double>(d * mu) * sub;
  }
  return total;
}

}  // namespace tracelab
