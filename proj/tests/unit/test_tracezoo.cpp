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

using namespace tracelab;

namespace {

TraceFn make(const std::string& text, const FieldPtr& f) { return realize(parse_spec(text), f); }

}  // namespace

TEST_SUITE("tracezoo") {
  TEST_CASE("text form round-trips") {
    for (const std::string s : {"kl3", "psi:2", "psi:-4", "chi:5", "ap:3", "sym:2,4",
                                "prod(kl2,chi:1)", "scale(3,kl4)", "inv(5,prod(psi:1,ap:2))"}) {
      CHECK(to_string(parse_spec(s)) == s);
    }
    for (const std::string bad : {"", "kl", "psi:", "foo", "prod(kl2)", "kl3x", "scale(3 kl2)", "sym:2"}) {
      CHECK_ERRC(parse_spec(bad), Errc::bad_param);
    }
  }

  TEST_CASE("constructors") {
    const auto f = make_field(13);
    const auto kl3 = kl_all(3, f).trace();
    CHECK(oracle::max_diff(oracle::values(make("scale(1,kl3)", f)), oracle::values(kl3)) == 0.0);
    const auto psi0 = make("psi:0", f);
    for (const auto v : psi0.values()) CHECK(v == cplx(1.0));
    const auto psi = make("psi:3", f);
    for (std::int64_t x = 0; x < 13; ++x) CHECK(std::abs(psi(x) - oracle::e(3 * x, 13)) < 1e-14);
    const auto chi = make("chi:2", f);
    CHECK(chi(0) == cplx(0));
    const auto g = oracle::primitive_root(13);
    std::int64_t x = 1;
    for (std::int64_t j = 0; j < 12; ++j, x = x * g % 13) CHECK(std::abs(chi(x) - oracle::e(2 * j, 12)) < 1e-14);
    const auto ap = make("ap:16", f);
    for (std::int64_t y = 0; y < 13; ++y) CHECK(ap(y) == cplx(y == 3 ? 1.0 : 0.0));
    const auto inv = make("inv(5,kl3)", f);
    CHECK(inv(0) == cplx(0));
    for (std::int64_t y = 1; y < 13; ++y) CHECK(inv(y) == kl3(5 * oracle::inv(y, 13)));
    const auto sc = make("scale(4,kl3)", f);
    for (std::int64_t y = 0; y < 13; ++y) CHECK(sc(y) == kl3(4 * y));
  }

  TEST_CASE("products are pointwise") {
    const auto f = make_field(31);
    const auto a = make("kl3", f), b = make("chi:7", f), ab = make("prod(kl3,chi:7)", f);
    for (std::int64_t x = 0; x < 31; ++x) CHECK(ab(x) == a(x) * b(x));
  }

  TEST_CASE("symmetric powers") {
    const auto f = make_field(31);
    const auto kl2 = kl_all(2, f).trace();
    const auto s1 = make("sym:1,3", f);
    for (std::int64_t x = 1; x < 31; ++x) CHECK(std::abs(s1(x) - kl2(3 * x)) < 1e-12);
    const auto s0 = make("sym:0,3", f);
    for (std::int64_t x = 1; x < 31; ++x) CHECK(s0(x) == cplx(1.0));
    const auto s3 = make("sym:3,2", f);
    for (std::int64_t x = 1; x < 31; ++x) {
      const double theta = std::acos(std::clamp(kl2(2 * x).real() / 2.0, -1.0, 1.0));
      const double want = std::abs(std::sin(theta)) < 1e-6 ? (std::cos(theta) > 0 ? 4.0 : -4.0)
                                                           : std::sin(4 * theta) / std::sin(theta);
      CHECK(std::abs(s3(x) - want) < 1e-6);
    }
  }

  TEST_CASE("parameter errors") {
    const auto f = make_field(13);
    CHECK_ERRC(make("chi:12", f), Errc::bad_param);
    CHECK_ERRC(make("chi:-1", f), Errc::bad_param);
    CHECK_ERRC(make("scale(13,kl2)", f), Errc::bad_param);
    CHECK_ERRC(make("inv(0,kl2)", f), Errc::bad_param);
    CHECK_ERRC(make("kl0", f), Errc::bad_param);
    CHECK_ERRC(make("sym:-1,2", f), Errc::bad_param);
  }

  TEST_CASE("torus detection") {
    const auto f7 = make_field(7);
    const auto kl2 = torus_detect(make("kl2", f7));
    CHECK(kl2.members == std::vector<std::int64_t>{1});
    CHECK(kl2.is_subgroup);
    for (const std::string s : {"chi:1", "chi:3", "psi:0"}) {
      const auto t = torus_detect(make(s, make_field(13)));
      CHECK(t.members.size() == 12);
      CHECK(t.is_subgroup);
    }
    // chi(x^... ) of order 2 times a function of x^2: the squares form the torus.
    const auto f13 = make_field(13);
    std::vector<cplx> v(13, 0.0);
    SplitMix64 rng(31);
    std::vector<cplx> by_class(13);
    for (auto& c : by_class) c = {rng.unit() + 0.5, rng.unit()};
    for (std::int64_t x = 1; x < 13; ++x) v[static_cast<std::size_t>(x)] = by_class[static_cast<std::size_t>(f13->mul(x, x))];
    const auto sq = torus_detect(TraceFn(f13, v, "even"));
    CHECK(sq.members == std::vector<std::int64_t>{1, 12});
    CHECK(sq.is_subgroup);
    CHECK_ERRC(torus_detect(make("ap:0", f13)), Errc::bad_param);
    for (const auto p : {53L, 71L}) {
      CHECK(torus_detect(make("kl3", make_field(p))).members == std::vector<std::int64_t>{1});
    }
  }
}
