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

#include "tracelab/xforms.hpp"

#include <cmath>
#include <utility>

#include "tracelab/error.hpp"
#include "tracelab/fft.hpp"

namespace tracelab {

TraceFn::TraceFn(FieldPtr field, std::vector<cplx> values, std::string label)
    : field_(std::move(field)), values_(std::move(values)), label_(std::move(label)) {
  if (!field_) throw Error(Errc::bad_param, "TraceFn needs a field");
  if (values_.size() != static_cast<std::size_t>(field_->p())) {
    throw Error(Errc::bad_param, "TraceFn expects " + std::to_string(field_->p()) +
                                     " values, got " + std::to_string(values_.size()));
  }
  for (const auto& v : values_) sup_norm_ = std::max(sup_norm_, std::abs(v));
}

TraceFn TraceFn::zero(FieldPtr field, std::string label) {
  const auto n = static_cast<std::size_t>(field->p());
  return TraceFn(std::move(field), std::vector<cplx>(n, 0.0), std::move(label));
}

double TraceFn::norm2_squared() const noexcept {
  double acc = 0.0;
  for (const auto& v : values_) acc += std::norm(v);
  return acc;
}

TraceFn TraceFn::restricted_to_units() const {
  auto v = values_;
  v[0] = 0.0;
  return TraceFn(field_, std::move(v), label_);
}

void require_same_field(const TraceFn& a, const TraceFn& b) {
  if (a.p() != b.p()) {
    throw Error(Errc::field_mismatch, "functions over F_" + std::to_string(a.p()) +
                                          " and F_" + std::to_string(b.p()));
  }
}

TraceFn operator+(const TraceFn& a, const TraceFn& b) {
  require_same_field(a, b);
  std::vector<cplx> v(a.values().begin(), a.values().end());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values()[i];
  return TraceFn(a.field_ptr(), std::move(v), "(" + a.label() + "+" + b.label() + ")");
}

TraceFn operator*(cplx scalar, const TraceFn& k) {
  std::vector<cplx> v(k.values().begin(), k.values().end());
  for (auto& x : v) x *= scalar;
  return TraceFn(k.field_ptr(), std::move(v), k.label());
}

TraceFn multiply(const TraceFn& a, const TraceFn& b) {
  require_same_field(a, b);
  std::vector<cplx> v(a.values().begin(), a.values().end());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= b.values()[i];
  return TraceFn(a.field_ptr(), std::move(v), "prod(" + a.label() + "," + b.label() + ")");
}

TraceFn fourier(const TraceFn& k) {
  auto out = fft::dft(k.values(), +1);
  const double scale = 1.0 / k.field().sqrt_p();
  for (auto& v : out) v *= scale;
  return TraceFn(k.field_ptr(), std::move(out), "fourier(" + k.label() + ")");
}

namespace {

// K restricted to F_p^x in discrete-log order: seq[j] = K(g^j).
std::vector<cplx> log_sequence(const TraceFn& k) {
  const auto& f = k.field();
  std::vector<cplx> seq(static_cast<std::size_t>(f.order()));
  for (std::int64_t j = 0; j < f.order(); ++j) seq[static_cast<std::size_t>(j)] = k(f.exp_g(j));
  return seq;
}

TraceFn from_log_sequence(const FieldPtr& field, const std::vector<cplx>& seq,
                          std::string label) {
  std::vector<cplx> v(static_cast<std::size_t>(field->p()), 0.0);
  for (std::int64_t j = 0; j < field->order(); ++j) {
    v[static_cast<std::size_t>(field->exp_g(j))] = seq[static_cast<std::size_t>(j)];
  }
  return TraceFn(field, std::move(v), std::move(label));
}

}  // namespace

MellinTable mellin(const TraceFn& k) {
  const auto& f = k.field();
  auto coeffs = fft::dft(log_sequence(k), -1);
  const double scale = 1.0 / std::sqrt(static_cast<double>(f.order()));
  for (auto& c : coeffs) c *= scale;
  return {k.field_ptr(), std::move(coeffs)};
}

TraceFn mellin_invert(const MellinTable& table) {
  const auto& f = *table.field;
  if (table.coeffs.size() != static_cast<std::size_t>(f.order())) {
    throw Error(Errc::bad_param, "Mellin table has the wrong length");
  }
  auto seq = fft::dft(table.coeffs, +1);
  const double scale = 1.0 / std::sqrt(static_cast<double>(f.order()));
  for (auto& v : seq) v *= scale;
  return from_log_sequence(table.field, seq, "mellin_invert");
}

TraceFn mconv(const TraceFn& m, const TraceFn& l) {
  require_same_field(m, l);
  auto seq = fft::cyclic_convolve(log_sequence(m), log_sequence(l));
  const double scale = 1.0 / m.field().sqrt_p();
  for (auto& v : seq) v *= scale;
  return from_log_sequence(m.field_ptr(), seq, "mconv(" + m.label() + "," + l.label() + ")");
}

TraceFn mconv_direct(const TraceFn& m, const TraceFn& l) {
  require_same_field(m, l);
  const auto& f = m.field();
  const std::int64_t p = f.p();
  std::vector<cplx> v(static_cast<std::size_t>(p), 0.0);
  for (std::int64_t w = 1; w < p; ++w) {
    cplx acc = 0.0;
    for (std::int64_t u = 1; u < p; ++u) acc += m(u) * l(f.mul(w, f.inv(u)));
    v[static_cast<std::size_t>(w)] = acc / f.sqrt_p();
  }
  return TraceFn(m.field_ptr(), std::move(v), "mconv(" + m.label() + "," + l.label() + ")");
}

cplx mconv_origin(const TraceFn& m, const TraceFn& l) {
  require_same_field(m, l);
  cplx total = 0.0;
  for (std::int64_t u = 1; u < m.p(); ++u) total += m(u);
  return total * l(0) / m.field().sqrt_p();
}

}  // namespace tracelab
