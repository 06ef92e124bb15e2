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
#include <vector>

#include "tracelab/xforms.hpp"

namespace tracelab {

/// Normalized Gauss sums eps[k] = p^{-1/2} sum_{x != 0} chi_k(x) e(x/p).
struct GaussTable {
  FieldPtr field;
  std::vector<cplx> eps;
};

GaussTable gauss_table(const FieldPtr& field);

/// Kcheck^6(n) = p^{-1/2} sum_{x != 0} Kl_6(nx) K(x) for every n in F_p.
TraceFn gl6(const TraceFn& k);

/// Same transform by the O(p^2) double sum against a Kl_6 table.
TraceFn gl6_direct(const TraceFn& k);

/// max_{n != 0} |gl6(Kl_2)(n) - Kl_4(n) + p^{-5/2} + p^{-7/2}|.
double identity_kl2(const FieldPtr& field);

/// max_{n != 0} |gl6(psi_a)(n) - Kl_5(-n/a) - p^{-3}|, psi_a(x) = e(ax/p).
/// Throws BadParam when a = 0 mod p.
double identity_psi(std::int64_t a, const FieldPtr& field);

/// max_m |gl6(delta_a)(m) - p^{-1/2} Kl_6(am)| over all m in F_p.
/// Throws BadParam when a = 0 mod p (delta_0 is invisible to the transform).
double identity_ap(std::int64_t a, const FieldPtr& field);

struct Gl6Mellin {
  /// (p-1)^{-1/2} sum_k eps[k]^6 Ktilde(chi_k) conj(chi_k(n)) on F_p^x, 0 at 0.
  TraceFn value;
  /// value - gl6(K) on F_p^x, 0 at 0.
  TraceFn residual;
  double max_residual = 0.0;
  /// The k = 0 summand, which is the same for every n.
  cplx trivial_term;
};

Gl6Mellin gl6_via_mellin(const TraceFn& k);

}  // namespace tracelab
