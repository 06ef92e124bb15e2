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

#include <span>
#include <string>
#include <vector>

#include "tracelab/ffield.hpp"

namespace tracelab {

/// A complex-valued function on F_p stored densely, values[a] = K(a).
class TraceFn {
 public:
  TraceFn(FieldPtr field, std::vector<cplx> values, std::string label);

  static TraceFn zero(FieldPtr field, std::string label = "zero");

  const PrimeField& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::int64_t p() const noexcept { return field_->p(); }

  std::span<const cplx> values() const noexcept { return values_; }
  /// K(a) for any integer a (reduced mod p).
  cplx operator()(std::int64_t a) const noexcept {
    return values_[static_cast<std::size_t>(field_->reduce(a))];
  }
  cplx at(std::size_t index) const { return values_.at(index); }

  const std::string& label() const noexcept { return label_; }
  double sup_norm() const noexcept { return sup_norm_; }
  /// sum_a |K(a)|^2 over all of F_p.
  double norm2_squared() const noexcept;

  /// Copy with K(0) replaced by 0, i.e. the restriction to F_p^x extended by zero.
  TraceFn restricted_to_units() const;

 private:
  FieldPtr field_;
  std::vector<cplx> values_;
  std::string label_;
  double sup_norm_ = 0.0;
};

/// Throws FieldMismatch unless both functions live over the same prime.
void require_same_field(const TraceFn& a, const TraceFn& b);

TraceFn operator+(const TraceFn& a, const TraceFn& b);
TraceFn operator*(cplx scalar, const TraceFn& k);
/// Pointwise product.
TraceFn multiply(const TraceFn& a, const TraceFn& b);

/// Mellin coefficients over F_p^x: coeffs[k] = Ktilde(chi_k) with
/// chi_k(g^j) = e(kj/(p-1)).
struct MellinTable {
  FieldPtr field;
  std::vector<cplx> coeffs;
};

/// Unitary Fourier transform Khat(b) = p^{-1/2} sum_a K(a) e(ab/p).
TraceFn fourier(const TraceFn& k);

/// Ktilde(chi) = (p-1)^{-1/2} sum_{x != 0} K(x) conj(chi(x)). K(0) is ignored.
MellinTable mellin(const TraceFn& k);

/// K(x) = (p-1)^{-1/2} sum_chi Ktilde(chi) chi(x) on F_p^x, and 0 at x = 0.
TraceFn mellin_invert(const MellinTable& table);

/// Normalized multiplicative convolution
///   (M * L)(v) = p^{-1/2} sum_{u in F_p^x} M(u) L(v/u),  v in F_p^x.
/// Index 0 of the result is 0; see mconv_origin for the defining sum at v = 0.
/// Evaluated as a length-(p-1) cyclic convolution in discrete-log coordinates.
TraceFn mconv(const TraceFn& m, const TraceFn& l);

/// Same as mconv, by the O(p^2) double sum.
TraceFn mconv_direct(const TraceFn& m, const TraceFn& l);

/// The defining sum at v = 0: p^{-1/2} L(0) sum_{u != 0} M(u).
cplx mconv_origin(const TraceFn& m, const TraceFn& l);

}  // namespace tracelab
