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

#include "tracelab/ffield.hpp"
#include "tracelab/xforms.hpp"

namespace tracelab {

/// values[n] = Kl_k(n; p) for n = 0..p-1, normalized so |Kl_k(n)| <= k for
/// n != 0. The n = 0 entry follows the recursion: (-1)^{k-1} p^{-(k-1)/2}.
struct KloostermanTable {
  FieldPtr field;
  int k = 1;
  std::vector<cplx> values;

  TraceFn trace() const;
};

enum class KlMethod {
  automatic,  // direct for small p, dlog convolution otherwise
  direct,     // O(k p^2) recursion
  fast,       // O(k p log p) via cyclic convolution in dlog coordinates
};

/// Kl_k(a) = p^{-1/2} sum_{x != 0} e(x/p) Kl_{k-1}(a / x), Kl_1(a) = e(a/p).
KloostermanTable kl_all(int k, const FieldPtr& field, KlMethod method = KlMethod::automatic);

/// Nested enumeration of the k-1 free variables (the last one is determined
/// by the product). Limited to k <= 4 and p <= 31; throws OracleTooLarge
/// otherwise.
cplx kl_brute(int k, std::int64_t n, const PrimeField& field);

/// Classical Kloosterman sum S(m, n; c) = sum_{x mod c, (x,c)=1} e((mx + n xbar)/c).
cplx kloosterman_s(std::int64_t m, std::int64_t n, std::int64_t c);

/// Parameters of the complete sum M_{n1,r}(m, n, l; rc). `q` is the ambient
/// prime whose inverse appears in the sum; `sign` is +1 or -1.
struct MSumParams {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t ell = 1;
  std::int64_t r = 1;
  std::int64_t c = 1;
  std::int64_t n1 = 1;
  int sign = 1;
  std::int64_t q = 2;
};

/// sum_{u mod c}^* e(+-ubar lbar qbar m / c) S(qbar r ubar, +-qbar n; rc/n1).
/// Inverses of q, u and l paired with /c are taken mod c; the q-bar of the
/// second Kloosterman argument is the inverse mod rc/n1.
cplx m_sum_direct(const MSumParams& params);

/// sum_{d | c} d mu(c/d) sum_{x mod rc/n1, (x, rc/n1)=1, l n1 x = -+m (d)}
///   e(+-qbar n xbar / (rc/n1)).
cplx m_sum_formula(const MSumParams& params);

}  // namespace tracelab
