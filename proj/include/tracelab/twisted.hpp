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

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tracelab/hecke.hpp"
#include "tracelab/xforms.hpp"

namespace tracelab {

enum class WindowKind { zero, plain_bump, oscillated_bump };

/// Smooth test function. plain_bump is exp(1 - 1/(1 - t^2)) with t the
/// affine map of the support onto (-1, 1); oscillated_bump multiplies it by
/// cos(Z x). The widened variant has support (0.01, 100) instead of (1, 2).
class Window {
 public:
  Window(double Z, WindowKind kind, bool widened = false);

  static Window zero() { return Window(1.0, WindowKind::zero); }

  double operator()(double x) const noexcept;

  double Z() const noexcept { return Z_; }
  WindowKind kind() const noexcept { return kind_; }
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double Z_;
  WindowKind kind_;
  double lo_, hi_;
};

/// Throws BadParam when Z < 1.
Window make_window(double Z, WindowKind kind);

/// max |V^{(i)}| / Z^i for i = 1..4 by central differences on `points`
/// equally spaced nodes of the support.
std::array<double, 4> derivative_sups(const Window& v, std::size_t points = 10'000);

struct TwistedSum {
  cplx value;
  double envelope = 0.0;  // sup|K| sum |lambda(r,n) lambda_f(n) V(n/X)|
  std::size_t terms = 0;
};

/// S_{V,r}(K, X) = sum_{X < n < 2X} lambda(r,n) lambda_f(n) K(n r^2) V(n/X),
/// summed pairwise so the result does not depend on `parallel`.
/// Throws TableTooSmall if the GL_3 bound or GL_2 range misses some n.
TwistedSum s_vr_detail(const TraceFn& k, double X, std::int64_t r, const Window& v,
                       const HeckeGL3& table, bool parallel = false);
cplx s_vr(const TraceFn& k, double X, std::int64_t r, const Window& v, const HeckeGL3& table);

/// S^t_V(K, X) = sum_{r >= 1, X / r^2 >= 1} S_{V,r}(K, X / r^2), optionally
/// stopping at r_max.
TwistedSum s_total_detail(const TraceFn& k, double X, const Window& v, const HeckeGL3& table,
                          std::optional<std::int64_t> r_max = std::nullopt,
                          bool parallel = false);
cplx s_total(const TraceFn& k, double X, const Window& v, const HeckeGL3& table);

/// |K(n r^2) - (p-1)^{-1/2} sum_chi Ktilde(chi) chi(n r^2)|; BadParam if p | nr.
double mellin_decompose_check(const TraceFn& k, std::int64_t n, std::int64_t r);

struct ScalingRow {
  std::int64_t p = 0;
  std::int64_t X = 0;
  double abs_s = 0.0;
  double ratio = 0.0;      // |S| / X
  double log_ratio = 0.0;  // log|S| / log p
  double envelope = 0.0;   // trivial bound, divided by X
  bool in_theorem_range = false;  // Z^4 p^{11/4} < X < Z^4 p^{(7 - theta_3)/2}
};

struct ScalingReport {
  std::string spec;
  double Z = 1.0;
  std::vector<ScalingRow> rows;
  std::optional<double> slope;  // least squares of log|S| against log p
};

/// Smallest tables that cover s_total at X: GL_3 bound and GL_2 range 2X.
std::shared_ptr<const HeckeGL3> tables_for(double X);

/// S^t_V(K, p^3) for each prime; primes above 101 are rejected (BadParam).
/// `tables` must cover 2 max(p)^3; null builds them with tables_for.
ScalingReport scaling_experiment(const std::string& spec, const std::vector<std::int64_t>& primes,
                                 const Window& v, std::shared_ptr<const HeckeGL3> tables = nullptr,
                                 bool parallel = false);

}  // namespace tracelab
