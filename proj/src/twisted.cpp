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

#include "tracelab/twisted.hpp"

#include <algorithm>
#include <cmath>
#include <span>

#include "tracelab/error.hpp"
#include "tracelab/parallel.hpp"
#include "tracelab/tracezoo.hpp"

namespace tracelab {
namespace {

template <class T>
T pairwise_sum(std::span<const T> xs) {
  if (xs.size() <= 8) {
    T acc{};
    for (const auto& x : xs) acc += x;
    return acc;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

double bump(double t) noexcept {
  if (t <= -1.0 || t >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - t * t));
}

}  // namespace

Window::Window(double Z, WindowKind kind, bool widened)
    : Z_(Z), kind_(kind), lo_(widened ? 0.01 : 1.0), hi_(widened ? 100.0 : 2.0) {
  if (!(Z >= 1.0)) throw Error(Errc::bad_param, "window parameter Z must be >= 1");
}

double Window::operator()(double x) const noexcept {
  if (kind_ == WindowKind::zero || x <= lo_ || x >= hi_) return 0.0;
  const double t = (2.0 * x - (lo_ + hi_)) / (hi_ - lo_);
  const double b = bump(t);
  return kind_ == WindowKind::oscillated_bump ? b * std::cos(Z_ * x) : b;
}

Window make_window(double Z, WindowKind kind) { return Window(Z, kind); }

std::array<double, 4> derivative_sups(const Window& v, std::size_t points) {
  const double h = (v.hi() - v.lo()) / static_cast<double>(points);
  // Central difference stencils for orders 1..4 with error O(h^2).
  std::array<double, 4> sup{};
  for (std::size_t i = 0; i <= points; ++i) {
    const double x = v.lo() + h * static_cast<double>(i);
    const double m2 = v(x - 2 * h), m1 = v(x - h), c = v(x), p1 = v(x + h), p2 = v(x + 2 * h);
    const std::array<double, 4> d{
        (p1 - m1) / (2 * h),
        (p1 - 2 * c + m1) / (h * h),
        (p2 - 2 * p1 + 2 * m1 - m2) / (2 * h * h * h),
        (p2 - 4 * p1 + 6 * c - 4 * m1 + m2) / (h * h * h * h),
    };
    for (std::size_t o = 0; o < 4; ++o) sup[o] = std::max(sup[o], std::abs(d[o]));
  }
  for (std::size_t o = 0; o < 4; ++o) sup[o] /= std::pow(v.Z(), static_cast<double>(o + 1));
  return sup;
}

TwistedSum s_vr_detail(const TraceFn& k, double X, std::int64_t r, const Window& v,
                       const HeckeGL3& table, bool parallel) {
  if (r < 1) throw Error(Errc::bad_param, "r must be >= 1");
  TwistedSum out;
  if (!(X >= 1.0)) return out;
  const auto first = static_cast<std::int64_t>(std::floor(X)) + 1;
  const auto last = static_cast<std::int64_t>(std::ceil(2.0 * X)) - 1;
  if (last < first) return out;
  if (last > table.gl2().N || r * r * last > table.bound()) {
    throw Error(Errc::table_too_small,
                "S_{V,r} at X = " + std::to_string(X) + ", r = " + std::to_string(r) +
                    " needs lambda(r, n) for n <= " + std::to_string(last) + " (bound " +
                    std::to_string(table.bound()) + ")");
  }
  const auto& f = k.field();
  const std::int64_t r2 = f.mul(r, r);
  const double sup_k = k.sup_norm();
  const auto count = static_cast<std::size_t>(last - first + 1);
  std::vector<cplx> terms(count);
  std::vector<double> bounds(count);
  parallel_for(count, parallel, [&](std::size_t i) {
    const std::int64_t n = first + static_cast<std::int64_t>(i);
    const double w = table(r, n) * table.gl2().lam[static_cast<std::size_t>(n)] *
                     v(static_cast<double>(n) / X);
    terms[i] = w * k(f.mul(n, r2));
    bounds[i] = std::abs(w) * sup_k;
  });
  out.value = pairwise_sum<cplx>(terms);
  out.envelope = pairwise_sum<double>(bounds);
  out.terms = count;
  return out;
}

cplx s_vr(const TraceFn& k, double X, std::int64_t r, const Window& v, const HeckeGL3& table) {
  return s_vr_detail(k, X, r, v, table).value;
}

TwistedSum s_total_detail(const TraceFn& k, double X, const Window& v, const HeckeGL3& table,
                          std::optional<std::int64_t> r_max, bool parallel) {
  TwistedSum out;
  for (std::int64_t r = 1; X / static_cast<double>(r * r) >= 1.0; ++r) {
    if (r_max && r > *r_max) break;
    const auto part = s_vr_detail(k, X / static_cast<double>(r * r), r, v, table, parallel);
    out.value += part.value;
    out.envelope += part.envelope;
    out.terms += part.terms;
  }
  return out;
}

cplx s_total(const TraceFn& k, double X, const Window& v, const HeckeGL3& table) {
  return s_total_detail(k, X, v, table).value;
}

double mellin_decompose_check(const TraceFn& k, std::int64_t n, std::int64_t r) {
  const auto& f = k.field();
  const std::int64_t x = f.mul(n, f.mul(r, r));
  if (x == 0) throw Error(Errc::bad_param, "mellin_decompose_check needs p not dividing nr");
  const auto table = mellin(k);
  const std::int64_t j = f.dlog(x);
  cplx rhs = 0.0;
  for (std::int64_t c = 0; c < f.order(); ++c) {
    rhs += table.coeffs[static_cast<std::size_t>(c)] * f.e_order(c * j % f.order());
  }
  rhs /= std::sqrt(static_cast<double>(f.order()));
  return std::abs(k(x) - rhs);
}

std::shared_ptr<const HeckeGL3> tables_for(double X) {
  const auto bound = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(2.0 * X)));
  auto gl2 = std::make_shared<const HeckeGL2>(tau_table(bound));
  return std::make_shared<const HeckeGL3>(std::move(gl2), bound);
}

ScalingReport scaling_experiment(const std::string& spec, const std::vector<std::int64_t>& primes,
                                 const Window& v, std::shared_ptr<const HeckeGL3> tables,
                                 bool parallel) {
  ScalingReport report;
  report.spec = spec;
  report.Z = v.Z();
  if (primes.empty()) return report;
  const auto parsed = parse_spec(spec);
  std::int64_t pmax = 0;
  for (const auto p : primes) {
    if (p > 101) throw Error(Errc::bad_param, "scaling primes must be <= 101");
    pmax = std::max(pmax, p);
  }
  if (!tables) tables = tables_for(static_cast<double>(pmax * pmax * pmax));
  const double z4 = std::pow(v.Z(), 4.0);
  for (const auto p : primes) {
    const auto field = make_field(p);
    const auto k = realize(parsed, field);
    ScalingRow row;
    row.p = p;
    row.X = p * p * p;
    const double x = static_cast<double>(row.X);
    const auto sum = s_total_detail(k, x, v, *tables, std::nullopt, parallel);
    const double lp = std::log(static_cast<double>(p));
    row.abs_s = std::abs(sum.value);
    row.ratio = row.abs_s / x;
    row.log_ratio = std::log(row.abs_s) / lp;
    row.envelope = sum.envelope / x;
    row.in_theorem_range = z4 * std::pow(p, 2.75) < x && x < z4 * std::pow(p, (7.0 - kTheta3) / 2.0);
    report.rows.push_back(row);
  }
  if (report.rows.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(report.rows.size());
    for (const auto& row : report.rows) {
      const double lx = std::log(static_cast<double>(row.p)), ly = std::log(row.abs_s);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    const double den = m * sxx - sx * sx;
    if (den != 0.0) report.slope = (m * sxy - sx * sy) / den;
  }
  return report;
}

}  // namespace tracelab
