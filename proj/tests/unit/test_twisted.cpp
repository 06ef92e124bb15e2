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
#include "tracelab/tracezoo.hpp"
#include "tracelab/twisted.hpp"

using namespace tracelab;

TEST_SUITE("twisted") {
  TEST_CASE("windows") {
    const auto v = make_window(1.0, WindowKind::plain_bump);
    CHECK(v(1.5) == doctest::Approx(1.0));
    CHECK(v(1.0) == 0.0);
    CHECK(v(2.0) == 0.0);
    CHECK(v(0.5) == 0.0);
    CHECK(v(7.0) == 0.0);
    for (double x = 1.01; x < 2.0; x += 0.07) CHECK(v(x) == doctest::Approx(oracle::bump(x)).epsilon(1e-14));
    const auto osc = make_window(8.0, WindowKind::oscillated_bump);
    for (double x = 1.01; x < 2.0; x += 0.07) CHECK(osc(x) == doctest::Approx(oracle::bump(x) * std::cos(8.0 * x)).epsilon(1e-13));
    CHECK_ERRC(make_window(0.5, WindowKind::plain_bump), Errc::bad_param);
    const Window wide(1.0, WindowKind::plain_bump, true);
    CHECK(wide.lo() == 0.01);
    CHECK(wide.hi() == 100.0);
    CHECK(wide(50.005) == doctest::Approx(1.0));
    CHECK(Window::zero()(1.5) == 0.0);
  }

  TEST_CASE("pinned derivative constants") {
    // Measured once on the 10^4-point grid.
    const auto plain = derivative_sups(make_window(8.0, WindowKind::plain_bump));
    const std::array<double, 4> plain_c = {0.54258911781502461, 1.3166134854667582, 7.9167255538332988,
                                           88.294592230668187};
    const auto osc = derivative_sups(make_window(8.0, WindowKind::oscillated_bump));
    const std::array<double, 4> osc_c = {0.96047918106648145, 1.2480636739934043, 7.8968409389181646,
                                         88.858221536076854};
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(plain[i] == doctest::Approx(plain_c[i]).epsilon(1e-9));
      CHECK(osc[i] == doctest::Approx(osc_c[i]).epsilon(1e-9));
    }
    // max |V'| of the plain bump is Z-free, so C_1 scales as 1/Z.
    const auto one = derivative_sups(make_window(1.0, WindowKind::plain_bump));
    CHECK(one[0] == doctest::Approx(8.0 * plain[0]).epsilon(1e-12));
  }

  TEST_CASE("s_vr against direct summation") {
    auto gl2 = std::make_shared<const HeckeGL2>(tau_table(1'000));
    const HeckeGL3 t(gl2, 1'000);
    const auto f = make_field(31);
    const auto v = make_window(1.0, WindowKind::plain_bump);
    std::vector<cplx> ones(31, 1.0);
    const TraceFn one(f, ones, "1");
    double direct = 0.0;
    for (std::int64_t n = 11; n < 20; ++n) direct += t(1, n) * gl2->lam[static_cast<std::size_t>(n)] * oracle::bump(n / 10.0);
    CHECK(std::abs(s_vr(one, 10.0, 1, v, t) - direct) < 1e-13);
    CHECK(s_vr_detail(one, 10.0, 1, v, t).terms == 9);

    const auto kl3 = kl_all(3, f).trace();
    cplx want = 0.0;
    for (std::int64_t n = 101; n < 200; ++n) {
      want += t(2, n) * gl2->lam[static_cast<std::size_t>(n)] * kl3(n * 4) * oracle::bump(n / 100.0);
    }
    const auto got = s_vr(kl3, 100.0, 2, v, t);
    CHECK(std::abs(got - want) < 1e-12);
    CHECK(got.real() == doctest::Approx(1.1051044931816163).epsilon(1e-12));
    CHECK(got.imag() == doctest::Approx(2.6533111189126659).epsilon(1e-12));
    CHECK(s_vr(kl3, 100.0, 2, Window::zero(), t) == cplx(0));
    CHECK_ERRC(s_vr(kl3, 200.0, 2, v, t), Errc::table_too_small);
  }

  TEST_CASE("s_total") {
    auto gl2 = std::make_shared<const HeckeGL2>(tau_table(100));
    const HeckeGL3 t(gl2, 100);
    const auto f = make_field(31);
    const auto v = make_window(1.0, WindowKind::plain_bump);
    const TraceFn one(f, std::vector<cplx>(31, 1.0), "1");
    CHECK(s_total(one, 0.5, v, t) == cplx(0));
    const auto parts = s_vr(one, 10.0, 1, v, t) + s_vr(one, 2.5, 2, v, t) + s_vr(one, 10.0 / 9.0, 3, v, t);
    CHECK(std::abs(s_total(one, 10.0, v, t) - parts) < 1e-14);
    CHECK(s_total_detail(one, 10.0, v, t, 1).value == s_vr(one, 10.0, 1, v, t));
    CHECK(s_total(TraceFn::zero(f), 30.0, v, t) == cplx(0));
  }

  TEST_CASE("pinned s_total at X = 31^3 and determinism") {
    const auto t = tables_for(29'791.0);
    const auto kl3 = kl_all(3, make_field(31)).trace();
    const auto v = make_window(1.0, WindowKind::plain_bump);
    const auto s = s_total_detail(kl3, 29'791.0, v, *t);
    CHECK(s.value.real() == doctest::Approx(27.290994333968058).epsilon(1e-11));
    CHECK(s.value.imag() == doctest::Approx(-24.79151295351799).epsilon(1e-11));
    CHECK(std::abs(s.value) <= s.envelope);
    const auto par = s_total_detail(kl3, 29'791.0, v, *t, std::nullopt, true);
    CHECK(par.value == s.value);
  }

  TEST_CASE("linearity in K") {
    const auto t = tables_for(500.0);
    SplitMix64 rng(71);
    const auto f = make_field(31);
    const auto a = oracle::random_trace(rng, f), b = oracle::random_trace(rng, f);
    const auto v = make_window(3.0, WindowKind::oscillated_bump);
    const cplx x(1.5, -0.5), y(-2.0, 0.25);
    const auto lhs = s_vr(x * a + y * b, 400.0, 1, v, *t);
    const auto rhs = x * s_vr(a, 400.0, 1, v, *t) + y * s_vr(b, 400.0, 1, v, *t);
    CHECK(std::abs(lhs - rhs) < 1e-9);
  }

  TEST_CASE("Mellin decomposition of K(n r^2)") {
    const auto f13 = make_field(13);
    std::vector<cplx> units(13, 1.0);
    units[0] = 0.0;
    CHECK(mellin_decompose_check(TraceFn(f13, units, "chi0"), 5, 2) < 1e-12);
    CHECK(mellin_decompose_check(kl_all(2, f13).trace(), 3, 2) <= 1e-10);
    CHECK_ERRC(mellin_decompose_check(kl_all(2, f13).trace(), 13, 2), Errc::bad_param);
    CHECK_ERRC(mellin_decompose_check(kl_all(2, f13).trace(), 1, 26), Errc::bad_param);
    SplitMix64 rng(72);
    for (const auto p : {13L, 31L, 101L}) {
      const auto f = make_field(p);
      for (int i = 0; i < 20; ++i) {
        const auto k = oracle::random_trace(rng, f);
        std::int64_t n = rng.uniform(1, 10 * p), r = rng.uniform(1, 50);
        if (n % p == 0) ++n;
        if (r % p == 0) ++r;
        CHECK(mellin_decompose_check(k, n, r) <= 1e-9);
      }
    }
  }

  TEST_CASE("scaling experiment") {
    const auto v = make_window(1.0, WindowKind::plain_bump);
    CHECK(scaling_experiment("kl3", {}, v).rows.empty());
    CHECK_ERRC(scaling_experiment("kl3", {103}, v), Errc::bad_param);
    const auto t = tables_for(2.0 * 23 * 23 * 23);
    const auto r = scaling_experiment("kl3", {13, 17, 23}, v, t);
    REQUIRE(r.rows.size() == 3);
    REQUIRE(r.slope.has_value());
    for (const auto& row : r.rows) {
      CHECK(row.X == row.p * row.p * row.p);
      CHECK(row.ratio <= row.envelope);
      CHECK(row.log_ratio == doctest::Approx(std::log(row.abs_s) / std::log(static_cast<double>(row.p))));
    }
    const auto again = scaling_experiment("kl3", {13, 17, 23}, v, t);
    for (std::size_t i = 0; i < 3; ++i) CHECK(again.rows[i].abs_s == r.rows[i].abs_s);
    CHECK(*again.slope == *r.slope);
  }
}
