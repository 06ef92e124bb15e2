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

#include <complex>
#include <cstddef>
#include <functional>

namespace tracelab::quad {

using Integrand = std::function<std::complex<double>(double)>;

struct Result {
  std::complex<double> value;
  std::size_t evaluations = 0;
  bool converged = true;  // false if some interval hit the depth limit
};

/// Adaptive Simpson with Richardson acceptance: an interval is accepted when
/// |S_left + S_right - S| <= 15 tol, and the extrapolated value is returned.
/// `initial_panels` equal pieces are refined independently.
Result adaptive_simpson(const Integrand& f, double a, double b, double tol,
                        std::size_t initial_panels = 16, int max_depth = 40);

/// Composite 61-point Gauss-Kronrod over `panels` equal pieces.
std::complex<double> gauss_kronrod(const Integrand& f, double a, double b, std::size_t panels);

}  // namespace tracelab::quad
