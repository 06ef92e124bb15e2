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
#include "tracelab/ffield.hpp"

using namespace tracelab;

TEST_SUITE("ffield") {
  TEST_CASE("smallest primitive roots") {
    CHECK(make_field(5)->generator() == 2);
    CHECK(make_field(7)->generator() == 3);
    for (const auto p : oracle::primes_in(2, 499)) {
      CHECK(make_field(p)->generator() == oracle::primitive_root(p));
    }
  }

  TEST_CASE("construction errors") {
    CHECK_ERRC(make_field(4), Errc::not_prime);
    CHECK_ERRC(make_field(1), Errc::not_prime);
    CHECK_ERRC(make_field(0), Errc::not_prime);
    CHECK_ERRC(make_field(1'000'003), Errc::too_large);
    CHECK(make_field(1'000'003, 2'000'000)->p() == 1'000'003);
  }

  TEST_CASE("inverses") {
    const auto f = make_field(5);
    CHECK(f->inv(1) == 1);
    CHECK(f->inv(2) == 3);
    CHECK(f->inv(-3) == 3);
    CHECK_ERRC(f->inv(0), Errc::zero_inverse);
    CHECK_ERRC(f->inv(10), Errc::zero_inverse);
    for (const auto p : {101L, 499L}) {
      const auto g = make_field(p);
      for (std::int64_t x = 1; x < p; ++x) CHECK(x * g->inv(x) % p == 1);
    }
  }

  TEST_CASE("discrete logarithms") {
    const auto f = make_field(5);
    CHECK(f->dlog(1) == 0);
    CHECK(f->dlog(4) == 2);
    CHECK_ERRC(f->dlog(0), Errc::zero_log);
    for (const auto p : oracle::primes_in(3, 499)) {
      const auto g = make_field(p);
      std::vector<int> seen(static_cast<std::size_t>(p - 1), 0);
      for (std::int64_t x = 1; x < p; ++x) {
        const auto j = g->dlog(x);
        REQUIRE(j >= 0);
        REQUIRE(j < p - 1);
        ++seen[static_cast<std::size_t>(j)];
        CHECK(g->exp_g(j) == x);
      }
      for (const int s : seen) CHECK(s == 1);
    }
  }

  TEST_CASE("dlog is a homomorphism") {
    SplitMix64 rng(11);
    for (const auto p : oracle::primes_in(3, 499)) {
      const auto f = make_field(p);
      for (int t = 0; t < 20; ++t) {
        const auto x = oracle::random_unit(rng, p), y = oracle::random_unit(rng, p);
        CHECK(f->dlog(f->mul(x, y)) == (f->dlog(x) + f->dlog(y)) % (p - 1));
      }
    }
  }

  TEST_CASE("additive characters") {
    for (const auto p : {2L, 3L, 13L, 101L, 499L}) {
      const auto f = make_field(p);
      for (std::int64_t a = 0; a < p; ++a) {
        CHECK(std::abs(std::abs(f->e(a)) - 1.0) < 1e-12);
        CHECK(std::abs(f->e(a) - oracle::e(a, p)) < 1e-13);
      }
      SplitMix64 rng(static_cast<std::uint64_t>(p));
      for (int t = 0; t < 200; ++t) {
        const auto a = rng.uniform(-3 * p, 3 * p), b = rng.uniform(-3 * p, 3 * p);
        CHECK(std::abs(f->e(a) * f->e(b) - f->e(a + b)) < 1e-10);
      }
    }
  }

  TEST_CASE("integer helpers") {
    CHECK(arith::mod(-7, 5) == 3);
    CHECK(arith::gcd(12, 18) == 6);
    CHECK(arith::inverse_mod(3, 7) == 5);
    CHECK(arith::inverse_mod(5, 1) == 0);
    CHECK_ERRC(arith::inverse_mod(4, 6), Errc::zero_inverse);
    CHECK(arith::moebius(1) == 1);
    CHECK(arith::moebius(6) == 1);
    CHECK(arith::moebius(12) == 0);
    CHECK(arith::moebius(30) == -1);
    CHECK(arith::prime_factors(360) == std::vector<std::int64_t>{2, 3, 5});
    CHECK(arith::powmod(3, 100, 101) == 1);
    CHECK(arith::mulmod(1'000'000'007LL, 998'244'353LL, 1'000'000'009LL) ==
          static_cast<std::int64_t>((__int128)1'000'000'007LL * 998'244'353LL % 1'000'000'009LL));
    CHECK(std::abs(arith::unit_root(1'000'000'000'001LL, 4) - oracle::cplx(0, 1)) < 1e-15);
  }
}
