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

#include <doctest.h>

#include "helpers.hpp"
#include "oracle.hpp"
#include "tracelab/kloosterman.hpp"

using namespace tracelab;

TEST_SUITE("kloosterman") {
  TEST_CASE("spec values at p = 5") {
    const auto f = make_field(5);
    const auto kl1 = kl_all(1, f);
    for (std::int64_t n = 0; n < 5; ++n) CHECK(std::abs(kl1.values[n] - oracle::e(n, 5)) < 1e-15);
    const auto kl2 = kl_all(2, f);
    const double pi = std::numbers::pi;
    CHECK(kl2.values[1].real() == doctest::Approx((2 + 2 * std::cos(4 * pi / 5)) / std::sqrt(5.0)).epsilon(1e-14));
    CHECK(kl2.values[1].real() == doctest::Approx(0.1708204).epsilon(1e-7));
    CHECK(kl2.values[4].real() == doctest::Approx((2 + 2 * std::cos(2 * pi / 5)) / std::sqrt(5.0)).epsilon(1e-14));
    CHECK(std::abs(kl_brute(2, 1, *f) - kl2.values[1]) < 1e-12);
  }

  TEST_CASE("value at zero follows the recursion") {
    for (const auto p : {5L, 13L, 101L}) {
      const auto f = make_field(p);
      for (int k = 1; k <= 6; ++k) {
        const double want = (k % 2 ? 1.0 : -1.0) * std::pow(static_cast<double>(p), -(k - 1) / 2.0);
        CHECK(std::abs(kl_all(k, f).values[0] - want) < 1e-12);
      }
    }
  }

  TEST_CASE("kl_brute guard and oracle agreement") {
    const auto f7 = make_field(7);
    CHECK_ERRC(kl_brute(5, 1, *f7), Errc::oracle_too_large);
    CHECK_ERRC(kl_brute(2, 1, *make_field(37)), Errc::oracle_too_large);
    CHECK_ERRC(kl_all(0, f7), Errc::bad_param);
    const auto kl3 = kl_all(3, f7);
    for (std::int64_t n = 0; n < 7; ++n) {
      CHECK(std::abs(kl_brute(3, n, *f7) - kl3.values[n]) < 1e-10);
      CHECK(std::abs(oracle::kl(3, n, 7) - kl3.values[n]) < 1e-12);
    }
  }

  TEST_CASE("direct and fast recursions against the oracle") {
    for (const auto p : {11L, 23L, 31L}) {
      const auto f = make_field(p);
      for (int k = 2; k <= 4; ++k) {
        const auto direct = kl_all(k, f, KlMethod::direct);
        const auto fast = kl_all(k, f, KlMethod::fast);
        for (std::int64_t n = 1; n < p; ++n) {
          const auto want = oracle::kl(k, n, p);
          CHECK(std::abs(direct.values[n] - want) < 1e-10);
          CHECK(std::abs(fast.values[n] - want) < 1e-10);
        }
      }
    }
  }

  TEST_CASE("Deligne bound and reality") {
    for (const auto p : oracle::primes_in(2, 199)) {
      const auto f = make_field(p);
      for (int k = 1; k <= 6; ++k) {
        const auto t = kl_all(k, f);
        for (std::int64_t n = 1; n < p; ++n) CHECK(std::abs(t.values[n]) <= k + 1e-9);
      }
    }
    for (const auto p : {211L, 307L, 499L}) {
      const auto t = kl_all(2, make_field(p));
      for (const auto v : t.values) CHECK(std::abs(v.imag()) <= 1e-10);
    }
  }

  TEST_CASE("kl_k = mconv(psi, kl_{k-1})") {
    const auto f = make_field(101);
    const TraceFn psi(f, std::vector<cplx>(f->additive_roots().begin(), f->additive_roots().end()), "psi");
    for (int k = 2; k <= 5; ++k) {
      const auto want = mconv(psi, kl_all(k - 1, f).trace());
      CHECK(oracle::max_diff(oracle::values(want), kl_all(k, f).values, 1) < 1e-9);
    }
  }

  TEST_CASE("classical Kloosterman sums") {
    CHECK(std::abs(kloosterman_s(0, 0, 6) - 2.0) < 1e-12);
    CHECK(std::abs(kloosterman_s(1, 1, 2) - 1.0) < 1e-12);
    CHECK(std::abs(kloosterman_s(5, 7, 1) - 1.0) < 1e-12);
    CHECK_ERRC(kloosterman_s(1, 1, 0), Errc::bad_param);
    SplitMix64 rng(21);
    for (int t = 0; t < 100; ++t) {
      const auto c = rng.uniform(1, 60), m = rng.uniform(-50, 50), n = rng.uniform(-50, 50);
      CHECK(std::abs(kloosterman_s(m, n, c) - oracle::kloosterman_s(m, n, c)) < 1e-10);
    }
  }

  TEST_CASE("twisted multiplicativity of S(m, n; c)") {
    SplitMix64 rng(22);
    int checked = 0;
    while (checked < 60) {
      const auto c1 = rng.uniform(1, 25), c2 = rng.uniform(1, 25);
      if (arith::gcd(c1, c2) != 1) continue;
      const auto m = rng.uniform(0, 100), n = rng.uniform(0, 100);
      const auto i2 = arith::inverse_mod(c2, c1), i1 = arith::inverse_mod(c1, c2);
      const auto lhs = kloosterman_s(m, n, c1 * c2);
      const auto rhs = kloosterman_s(m * i2 * i2, n, c1) *
                       kloosterman_s(m * i1 * i1, n, c2);
      CHECK(std::abs(lhs - rhs) < 1e-9);
      const auto sym = kloosterman_s(m * i2, n * i2, c1) * kloosterman_s(m * i1, n * i1, c2);
      CHECK(std::abs(lhs - sym) < 1e-9);
      ++checked;
    }
  }

  TEST_CASE("Ramanujan-type sums, spec examples and a seeded grid") {
    MSumParams trivial;
    trivial.q = 7;
    trivial.n = 3;
    CHECK(std::abs(m_sum_direct(trivial) - 1.0) < 1e-12);
    CHECK(std::abs(m_sum_formula(trivial) - 1.0) < 1e-12);

    MSumParams a{.m = 2, .n = 3, .ell = 5, .r = 1, .c = 6, .n1 = 1, .sign = 1, .q = 7};
    CHECK(std::abs(m_sum_direct(a) - m_sum_formula(a)) < 1e-10);
    MSumParams b{.m = 3, .n = 5, .ell = 3, .r = 2, .c = 4, .n1 = 2, .sign = -1, .q = 11};
    CHECK(std::abs(m_sum_direct(b) - m_sum_formula(b)) < 1e-10);

    MSumParams bad = a;
    bad.n1 = 4;
    CHECK_ERRC(m_sum_direct(bad), Errc::bad_divisibility);
    bad = a;
    bad.ell = 2;
    CHECK_ERRC(m_sum_formula(bad), Errc::bad_param);
    bad = a;
    bad.sign = 0;
    CHECK_ERRC(m_sum_direct(bad), Errc::bad_param);

    SplitMix64 rng(23);
    const std::vector<std::int64_t> qs = {7, 11, 13, 17, 19, 23, 29, 31, 37};
    int checked = 0;
    while (checked < 200) {
      MSumParams s;
      s.c = rng.uniform(1, 30);
      s.r = rng.uniform(1, 4);
      std::vector<std::int64_t> divs;
      for (std::int64_t d = 1; d <= s.r * s.c; ++d) {
        if (s.r * s.c % d == 0) divs.push_back(d);
      }
      s.n1 = divs[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(divs.size()) - 1))];
      s.ell = rng.uniform(1, 40);
      s.q = qs[static_cast<std::size_t>(rng.uniform(0, 8))];
      const auto inner = s.r * s.c / s.n1;
      if (arith::gcd(s.ell, s.c) != 1 || arith::gcd(s.q, s.c) != 1 || arith::gcd(s.q, inner) != 1) continue;
      s.m = rng.uniform(-40, 40);
      s.n = rng.uniform(-40, 40);
      s.sign = rng.uniform(0, 1) ? 1 : -1;
      CHECK(std::abs(m_sum_direct(s) - m_sum_formula(s)) < 1e-8);
      ++checked;
    }
  }
}
