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

#pragma once

#include <cstdint>

#include "tracelab/bessel.hpp"
#include "tracelab/hecke.hpp"
#include "tracelab/twisted.hpp"

namespace tracelab {

inline constexpr int kDeltaWeight = 12;

/// V^+(y) = int V(x) 2 pi i^k J_{k-1}(4 pi sqrt(xy)) dx by adaptive Simpson
/// at absolute tolerance `tol`. For holomorphic f the minus transform is 0.
cplx vtransform(const Window& v, double y, int weight = kDeltaWeight, double tol = 1e-10);

/// Same integral by composite Gauss-Kronrod, an independent rule.
cplx vtransform_gk(const Window& v, double y, int weight = kDeltaWeight, std::size_t panels = 64);

/// Trapezoidal rule in t = sqrt(x) on the window support. The integrand and
/// all its derivatives vanish at both ends, so the error decays faster than
/// any power of the node count. Aliasing needs the bump bandwidth plus the
/// oscillation, so nodes = 0 picks 320 + 1.5 sqrt(y).
cplx vtransform_trapezoid(const Window& v, double y, int weight = kDeltaWeight,
                          std::size_t nodes = 0);

struct VoronoiResult {
  cplx lhs;
  cplx rhs;
  double absdiff = 0.0;
  std::int64_t m_max = 0;
  /// |rhs(2 m_max) - rhs(m_max)| / |rhs(2 m_max)|.
  double doubling_change = 0.0;
  double scale = 0.0;  // sum |lambda_f(m) V(m/X)|, the trivial bound on lhs
  /// max |trapezoid - Simpson| over the spot-checked dual arguments.
  double quadrature_gap = 0.0;
};

/// sum_m lambda_f(m) e(um/c) V(m/X) against
/// (X/c) sum_m lambda_f(m) e(-ubar m/c) V^+(m X / c^2), f = Delta.
/// The dual sum stops at the first m_max on a geometric grid (ratio 5/4)
/// whose dyadic tail estimate falls below 1e-8 scale. Dual terms use
/// vtransform_trapezoid, spot-checked against vtransform. BadParam unless gcd(u, c) = 1;
/// TableTooSmall if the tau table stops before 2 m_max.
VoronoiResult voronoi_check(std::int64_t c, std::int64_t u, double X, const Window& v,
                            const HeckeGL2& gl2);

}  // namespace tracelab
