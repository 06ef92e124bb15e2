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

#include "tracelab/quadrature.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace tracelab::quad {
namespace {

using cd = std::complex<double>;

struct Simpson {
  const Integrand& f;
  Result& out;
  int max_depth;

  cd eval(double x) {
    ++out.evaluations;
    return f(x);
  }

  cd refine(double a, double b, cd fa, cd fm, cd fb, cd whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const cd flm = eval(lm), frm = eval(rm);
    const cd left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const cd right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const cd delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth >= max_depth) {
      out.converged = false;
      return left + right + delta / 15.0;
    }
    return refine(a, m, fa, flm, fm, left, tol / 2, depth + 1) +
           refine(m, b, fm, frm, fb, right, tol / 2, depth + 1);
  }
};

}  // namespace

Result adaptive_simpson(const Integrand& f, double a, double b, double tol,
                        std::size_t initial_panels, int max_depth) {
  Result out;
  Simpson s{f, out, max_depth};
  const double h = (b - a) / static_cast<double>(initial_panels);
  const double panel_tol = tol / static_cast<double>(initial_panels);
  cd fa = s.eval(a);
  for (std::size_t i = 0; i < initial_panels; ++i) {
    const double lo = a + h * static_cast<double>(i);
    const double hi = i + 1 == initial_panels ? b : lo + h;
    const double m = 0.5 * (lo + hi);
    const cd fm = s.eval(m), fb = s.eval(hi);
    const cd whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    out.value += s.refine(lo, hi, fa, fm, fb, whole, panel_tol, 0);
    fa = fb;
  }
  return out;
}

std::complex<double> gauss_kronrod(const Integrand& f, double a, double b, std::size_t panels) {
  using boost::math::quadrature::gauss_kronrod;
  const double h = (b - a) / static_cast<double>(panels);
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double lo = a + h * static_cast<double>(i), hi = lo + h;
    // Non-adaptive: max_depth 0 gives a single 61-point Kronrod rule per panel.
    re += gauss_kronrod<double, 61>::integrate([&](double x) { return f(x).real(); }, lo, hi, 0);
    im += gauss_kronrod<double, 61>::integrate([&](double x) { return f(x).imag(); }, lo, hi, 0);
  }
  return {re, im};
}

}  // namespace tracelab::quad
