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

#include "tracelab/bessel.hpp"

#include <cmath>
#include <numbers>

#include "tracelab/error.hpp"

namespace tracelab {

BesselEvaluator::BesselEvaluator(int nu, double switch_point, int series_terms,
                                 int asymptotic_terms)
    : nu_(nu), x0_(switch_point), series_terms_(series_terms), asymptotic_terms_(asymptotic_terms) {
  if (nu < 0) throw Error(Errc::bad_param, "Bessel order must be >= 0");
}

double BesselEvaluator::operator()(double x) const {
  if (x < 0.0) throw Error(Errc::bad_param, "bessel_j needs x >= 0");
  return x < x0_ ? series(x) : asymptotic(x);
}

double BesselEvaluator::series(double x) const {
  using quad = __float128;
  const quad half = static_cast<quad>(x) / 2;
  quad term = 1;
  for (int i = 1; i <= nu_; ++i) term = term * half / i;
  quad sum = term;
  const quad h2 = half * half;
  for (int m = 1; m < series_terms_; ++m) {
    term = -term * h2 / (static_cast<quad>(m) * static_cast<quad>(m + nu_));
    sum += term;
    if (term == 0 || (m > half && (term < 0 ? -term : term) < 1e-36Q)) break;
  }
  return static_cast<double>(sum);
}

double BesselEvaluator::asymptotic(double x) const {
  // a_k = prod_{j=1..k} (mu - (2j-1)^2) / (k! 8^k), mu = 4 nu^2;
  // J = sqrt(2/(pi x)) (P cos w - Q sin w), w = x - (2 nu + 1) pi / 4.
  const double mu = 4.0 * nu_ * nu_;
  double p = 0.0, q = 0.0;
  double term = 1.0, last = INFINITY;
  for (int k = 0; k < asymptotic_terms_; ++k) {
    if (k > 0) term *= (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (8.0 * k * x);
    const double size = std::abs(term);
    // Terms may grow while (2k-1)^2 < mu; only past that is growth divergence.
    if (size > last && (2.0 * k - 1) * (2.0 * k - 1) > mu) break;
    last = size;
    if (size < 1e-17) break;
    switch (k % 4) {
      case 0: p += term; break;
      case 1: q += term; break;
      case 2: p -= term; break;
      default: q -= term; break;
    }
  }
  const double phase = (2.0 * nu_ + 1.0) * std::numbers::pi / 4.0;
  const double cx = std::cos(x), sx = std::sin(x);
  const double cp = std::cos(phase), sp = std::sin(phase);
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * (cx * cp + sx * sp) - q * (sx * cp - cx * sp));
}

double bessel_j(int nu, double x) { return BesselEvaluator(nu)(x); }

}  // namespace tracelab
