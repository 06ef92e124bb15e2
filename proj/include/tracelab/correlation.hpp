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
#include <optional>
#include <vector>

#include "tracelab/xforms.hpp"

namespace tracelab {

/// L_{alpha,beta}(u) = p^{-1/2} sum_a K(a) Kl_2(alpha a) e(-beta a u / p).
/// This is a reflected Fourier transform of K * [x alpha]^* Kl_2, O(p log p).
TraceFn l_func(const TraceFn& k, std::int64_t alpha, std::int64_t beta);

/// The same function from the Fourier side,
///   p^{-1/2} sum_{b + beta u != 0} Khat(b) e(alpha (b + beta u)^{-1} / p),
/// by the O(p^2) double sum.
TraceFn l_func_fourier_route(const TraceFn& k, std::int64_t alpha, std::int64_t beta);

struct LHatCheck {
  double max_deviation = 0.0;  // over x in F_p^x
  cplx lhat_at_zero;
  cplx rhs_at_zero;
};

/// Compares fourier(L_{alpha,beta})(x) with K(x/beta) Kl_2(alpha x / beta).
LHatCheck l_hat_check(const TraceFn& k, std::int64_t alpha, std::int64_t beta);

/// Z(v) = p^{-1/2} sum_{x != 0} K(xv) Kl_2(alpha x v) Kl_2(beta x), all v.
TraceFn z_func(const TraceFn& k, std::int64_t alpha, std::int64_t beta);

/// fourier(M * L_{alpha,beta}) with M(u) = Kl_2(gamma u) and the convolution
/// taken at v = 0 from its defining sum. Equals z_func(k, alpha, beta gamma).
TraceFn z_func_plancherel(const TraceFn& k, std::int64_t alpha, std::int64_t beta,
                          std::int64_t gamma);

/// sum_v Z(v) conj(Z'(v - delta)).
cplx corr(const TraceFn& z, const TraceFn& zp, std::int64_t delta);

struct QSumParams {
  std::int64_t alpha = 1, beta = 1, gamma = 1;
  std::int64_t alphap = 1, betap = 1, gammap = 1;
  std::int64_t k = 1;
  std::int64_t n = 0;
};

struct QSumResult {
  cplx direct;
  cplx via_corr;
  double deviation = 0.0;
  /// |direct - via_corr| when K and K' keep their values at 0. Nonzero in
  /// general: the chain through Z holds for functions supported on F_p^x.
  double origin_gap = 0.0;
};

/// FT(n) = p^{-1/2} sum_{u,u'} L(u) conj(L'(u')) sum_v Kl_2(gamma v/u)
/// Kl_2(gamma' v/u') e(kbar v n / p) against sqrt(p) corr(Z, Z', kbar n) with
/// Z = z_func(K, alpha, beta gamma). K and K' are restricted to F_p^x for
/// both routes. The direct side is the literal O(p^3) triple sum.
QSumResult q_sum_check(const TraceFn& k, const TraceFn& kp, const QSumParams& params);

struct ScanConfig {
  std::size_t trials = 50;     // off-diagonal tuples (delta != 0)
  std::size_t diag_trials = 0; // 0 selects ceil(trials / 5)
  std::uint64_t seed = 0;
  double offdiag_threshold = 10.0;  // on |corr| / sqrt(p)
  double diag_threshold = 10.0;     // on |corr - c p| / sqrt(p)
  bool parallel = false;
};

struct ScanRow {
  bool diagonal_kind = false;  // drawn as a diagonal tuple
  std::int64_t delta = 0;
  std::int64_t alpha = 1, beta = 1, gamma = 1;
  std::int64_t alphap = 1, betap = 1, gammap = 1;
  cplx value;
  double abs = 0.0;
  double ratio_sqrtq = 0.0;
  bool diagonal_flag = false;
};

struct ScanReport {
  std::int64_t p = 0;
  std::vector<ScanRow> rows;
  std::vector<std::int64_t> torus;  // T_F detected on K
  double max_offdiag_ratio = 0.0;
  double max_diag_deviation = 0.0;  // max |corr - c p|
  std::optional<cplx> fitted_c;     // unimodular; absent without diagonal rows
  std::vector<std::size_t> offending;  // rows over their threshold
  bool passed = true;
};

/// Random tuples with delta != 0 plus diagonal tuples (delta = 0, alpha' =
/// alpha, beta' gamma' = beta gamma). A row is flagged diagonal when delta = 0,
/// K = K', and alpha beta' gamma' / (alpha' beta gamma) lies in torus_detect(K).
ScanReport sqrt_cancel_scan(const TraceFn& k, const TraceFn& kp, const ScanConfig& config);

}  // namespace tracelab
