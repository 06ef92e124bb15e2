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
#include "tracelab/dual6.hpp"
#include "tracelab/kloosterman.hpp"
#include "tracelab/tracezoo.hpp"

using namespace tracelab;

TEST_SUITE("dual6") {
  TEST_CASE("Gauss sums") {
    for (const auto p : {5L, 13L, 101L}) {
      const auto f = make_field(p);
      const auto g = gauss_table(f);
      REQUIRE(g.eps.size() == static_cast<std::size_t>(p - 1));
      CHECK(std::abs(g.eps[0] + 1.0 / std::sqrt(static_cast<double>(p))) < 1e-10);
      for (std::size_t k = 1; k < g.eps.size(); ++k) CHECK(std::abs(std::abs(g.eps[k]) - 1.0) < 1e-9);
      // Direct definition for a few characters.
      const auto root = oracle::primitive_root(p);
      for (std::int64_t k : {1L, 2L, p - 2}) {
        cplx acc = 0.0;
        std::int64_t x = 1;
        for (std::int64_t j = 0; j < p - 1; ++j, x = x * root % p) acc += oracle::e(k * j, p - 1) * oracle::e(x, p);
        CHECK(std::abs(g.eps[static_cast<std::size_t>(k)] - acc / std::sqrt(static_cast<double>(p))) < 1e-11);
      }
    }
  }

  TEST_CASE("gl6 fast route equals the double sum and a by-hand oracle") {
    const auto f = make_field(13);
    SplitMix64 rng(51);
    const auto k = oracle::random_trace(rng, f);
    const auto fast = gl6(k);
    CHECK(oracle::max_diff(oracle::values(fast), oracle::values(gl6_direct(k))) < 1e-11);
    const auto kl6 = kl_all(6, f).values;
    for (std::int64_t n = 0; n < 13; ++n) {
      cplx acc = 0.0;
      for (std::int64_t x = 1; x < 13; ++x) acc += kl6[static_cast<std::size_t>(n * x % 13)] * k(x);
      CHECK(std::abs(fast(n) - acc / std::sqrt(13.0)) < 1e-12);
    }
    CHECK(gl6(TraceFn::zero(f)).sup_norm() == 0.0);
  }

  TEST_CASE("gl6 is linear") {
    SplitMix64 rng(52);
    const auto f = make_field(31);
    const auto a = oracle::random_trace(rng, f), b = oracle::random_trace(rng, f);
    const cplx x(0.3, -1.2), y(2.0, 0.5);
    const auto lhs = gl6(x * a + y * b);
    const auto rhs = x * gl6(a) + y * gl6(b);
    CHECK(oracle::max_diff(oracle::values(lhs), oracle::values(rhs)) < 1e-9);
  }

  TEST_CASE("the three dual identities") {
    CHECK(identity_kl2(make_field(5)) <= 1e-9);
    CHECK(identity_kl2(make_field(11)) <= 1e-9);
    CHECK(identity_kl2(make_field(101)) <= 1e-8);
    CHECK(identity_psi(1, make_field(7)) <= 1e-9);
    CHECK(identity_psi(3, make_field(7)) <= 1e-9);
    CHECK_ERRC(identity_psi(0, make_field(7)), Errc::bad_param);
    CHECK_ERRC(identity_psi(14, make_field(7)), Errc::bad_param);
    CHECK(identity_ap(3, make_field(61)) <= 1e-10);
    CHECK_ERRC(identity_ap(0, make_field(7)), Errc::bad_param);
    // The correction terms matter: without them the kl2 identity is off by about p^{-5/2}.
    const auto f = make_field(11);
    const auto lhs = gl6(kl_all(2, f).trace());
    const auto kl4 = kl_all(4, f).values;
    CHECK(std::abs(lhs(1) - kl4[1]) > 0.5 * std::pow(11.0, -2.5));
  }

  TEST_CASE("Mellin route; pinned residuals") {
    const auto f = make_field(13);
    const auto m = gl6_via_mellin(kl_all(3, f).trace());
    CHECK(m.max_residual < 1e-13);
    CHECK(m.trivial_term.real() == doctest::Approx(-2.917731638714819e-06).epsilon(1e-9));
    const auto c = gl6_via_mellin(realize(parse_spec("chi:1"), f));
    CHECK(c.max_residual < 1e-13);
    CHECK(std::abs(c.trivial_term) < 1e-15);
    const auto z = gl6_via_mellin(TraceFn::zero(f));
    CHECK(z.value.sup_norm() == 0.0);
    CHECK(z.max_residual == 0.0);
  }
}
