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

#include "tracelab/voronoi2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "tracelab/error.hpp"
#include "tracelab/ffield.hpp"
#include "tracelab/quadrature.hpp"

namespace tracelab {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTailFactor = 1e-8;
constexpr std::int64_t kFirstCut = 16;

cplx i_power(int k) {
  static constexpr cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((k % 4) + 4) % 4];
}

quad::Integrand kernel(const Window& v, double y, int weight) {
  const cplx phase = kTwoPi * i_power(weight);
  return [&v, y, phase, j = BesselEvaluator(weight - 1)](double x) -> cplx {
    const double w = v(x);
    if (w == 0.0) return 0.0;
    return phase * w * j(4.0 * std::numbers::pi * std::sqrt(x * y));
  };
}

/// The large-argument expansion of J_nu with precomputed coefficients, given
/// e^{iz} by the caller.
class HankelTail {
 public:
  explicit HankelTail(int nu) : nu_(nu) {
    const double mu = 4.0 * nu * nu;
    double a = 1.0;
    coeffs_.push_back(a);
    for (int k = 1; k < 60; ++k) {
      a *= (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (8.0 * k);
      if (a == 0.0) break;
      coeffs_.push_back(a);
    }
    rot_ = std::polar(1.0, -(2.0 * nu + 1.0) * std::numbers::pi / 4.0);
  }

  double operator()(double z, cplx e_iz) const {
    const double mu = 4.0 * nu_ * nu_;
    const double inv = 1.0 / z;
    double p = 0.0, q = 0.0, pow = 1.0, last = INFINITY;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const double term = coeffs_[k] * pow;
      const double size = std::abs(term);
      const double odd = 2.0 * static_cast<double>(k) - 1;
      if (size > last && odd * odd > mu) break;
      last = size;
      if (size < 1e-17) break;
      switch (k % 4) {
        case 0: p += term; break;
        case 1: q += term; break;
        case 2: p -= term; break;
        default: q -= term; break;
      }
      pow *= inv;
    }
    const cplx w = e_iz * rot_;
    return std::sqrt(2.0 / (std::numbers::pi * z)) * (p * w.real() - q * w.imag());
  }

 private:
  int nu_;
  std::vector<double> coeffs_;
  cplx rot_;
};

}  // namespace

cplx vtransform(const Window& v, double y, int weight, double tol) {
  if (y < 0.0) throw Error(Errc::bad_param, "vtransform needs y >= 0");
  if (v.kind() == WindowKind::zero) return 0.0;
  return quad::adaptive_simpson(kernel(v, y, weight), v.lo(), v.hi(), tol).value;
}

cplx vtransform_gk(const Window& v, double y, int weight, std::size_t panels) {
  if (y < 0.0) throw Error(Errc::bad_param, "vtransform needs y >= 0");
  if (v.kind() == WindowKind::zero) return 0.0;
  return quad::gauss_kronrod(kernel(v, y, weight), v.lo(), v.hi(), panels);
}

cplx vtransform_trapezoid(const Window& v, double y, int weight, std::size_t nodes) {
  if (y < 0.0) throw Error(Errc::bad_param, "vtransform needs y >= 0");
  if (v.kind() == WindowKind::zero) return 0.0;
  if (nodes == 0) nodes = 320 + static_cast<std::size_t>(std::ceil(1.5 * std::sqrt(y)));
  // x = t^2: the Bessel argument is omega t, linear in the node index, so in
  // the asymptotic regime e^{i omega t} advances by one complex rotation.
  const BesselEvaluator j(weight - 1);
  const HankelTail hankel(weight - 1);
  const double t0 = std::sqrt(v.lo()), t1 = std::sqrt(v.hi());
  const double h = (t1 - t0) / static_cast<double>(nodes);
  const double omega = 4.0 * std::numbers::pi * std::sqrt(y);
  const cplx step = std::polar(1.0, omega * h);
  cplx rot;
  double total = 0.0;
  for (std::size_t i = 1; i < nodes; ++i) {
    const double t = t0 + h * static_cast<double>(i);
    const double z = omega * t;
    if (i % 64 == 1) {
      rot = std::polar(1.0, z);
    } else {
      rot *= step;
    }
    const double w = v(t * t);
    if (w == 0.0) continue;
    total += 2.0 * t * w * (z < j.switch_point() ? j(z) : hankel(z, rot));
  }
  return kTwoPi * i_power(weight) * total * h;
}

VoronoiResult voronoi_check(std::int64_t c, std::int64_t u, double X, const Window& v,
                            const HeckeGL2& gl2) {
  if (c < 1) throw Error(Errc::bad_param, "modulus c must be >= 1");
  if (arith::gcd(u, c) != 1) {
    throw Error(Errc::bad_param, "voronoi_check needs gcd(u, c) = 1, got u = " +
                                     std::to_string(u) + ", c = " + std::to_string(c));
  }
  if (!(X > 0.0)) throw Error(Errc::bad_param, "X must be positive");
  VoronoiResult out;
  auto lam = [&](std::int64_t m) {
    if (m > gl2.N) {
      throw Error(Errc::table_too_small, "Voronoi sums need lambda_f(" + std::to_string(m) +
                                             "), table stops at " + std::to_string(gl2.N));
    }
    return gl2.lam[static_cast<std::size_t>(m)];
  };

  const auto first = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(v.lo() * X)));
  const auto last = static_cast<std::int64_t>(std::ceil(v.hi() * X));
  for (std::int64_t m = first; m <= last; ++m) {
    const double w = lam(m) * v(static_cast<double>(m) / X);
    out.lhs += w * arith::unit_root(arith::mulmod(arith::mod(u, c), m % c, c), c);
    out.scale += std::abs(w);
  }
  if (out.scale == 0.0) return out;

  const double y_unit = X / static_cast<double>(c * c);
  const double front = X / static_cast<double>(c);
  const std::int64_t ubar = arith::inverse_mod(arith::mod(u, c), c);

  // Tail beyond M: dyadic blocks [2^j M, 2^{j+1} M), each bounded by its
  // length times the larger |V^+| of two samples (|lambda_f| averages below 1).
  auto tail = [&](std::int64_t M) {
    double est = 0.0;
    for (int j = 0; j < 4; ++j) {
      const double lo = static_cast<double>(M) * std::ldexp(1.0, j);
      const double peak = std::max(std::abs(vtransform_trapezoid(v, lo * y_unit)),
                                   std::abs(vtransform_trapezoid(v, 1.5 * lo * y_unit)));
      est += lo * peak;
    }
    return front * est;
  };
  std::int64_t M = kFirstCut;
  while (tail(M) > kTailFactor * out.scale) {
    M += std::max<std::int64_t>(1, M / 4);
    if (2 * M > gl2.N) {
      throw Error(Errc::table_too_small, "Voronoi dual sum needs lambda_f up to " +
                                             std::to_string(2 * M) + ", table stops at " +
                                             std::to_string(gl2.N));
    }
  }
  out.m_max = M;

  std::vector<cplx> dual(static_cast<std::size_t>(2 * M + 1));
  for (std::int64_t m = 1; m <= 2 * M; ++m) {
    dual[static_cast<std::size_t>(m)] = vtransform_trapezoid(v, static_cast<double>(m) * y_unit);
  }
  for (const std::int64_t m : {std::int64_t{1}, M / 4 + 1, M / 2 + 1, M}) {
    const double y = static_cast<double>(m) * y_unit;
    out.quadrature_gap = std::max(out.quadrature_gap,
                                  std::abs(dual[static_cast<std::size_t>(m)] - vtransform(v, y)));
  }
  cplx partial = 0.0;
  for (std::int64_t m = 1; m <= 2 * M; ++m) {
    partial += lam(m) * arith::unit_root(-arith::mulmod(ubar, m % c, c), c) *
               dual[static_cast<std::size_t>(m)];
    if (m == M) out.rhs = front * partial;
  }
  const cplx doubled = front * partial;
  out.doubling_change = std::abs(doubled - out.rhs) / std::max(std::abs(doubled), 1e-300);
  out.absdiff = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace tracelab
