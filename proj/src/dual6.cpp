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

#include "tracelab/dual6.hpp"

#include <algorithm>
#include <cmath>

#include "tracelab/error.hpp"
#include "tracelab/fft.hpp"
#include "tracelab/kloosterman.hpp"

namespace tracelab {
namespace {

// Kl_6 at n = 0 times sum_{x != 0} K(x), over sqrt(p).
cplx gl6_at_zero(const TraceFn& k, const std::vector<cplx>& kl6) {
  cplx mass = 0.0;
  for (std::int64_t x = 1; x < k.p(); ++x) mass += k(x);
  return kl6[0] * mass / k.field().sqrt_p();
}

double max_dev_on_units(const TraceFn& a, const std::vector<cplx>& b) {
  double dev = 0.0;
  for (std::int64_t n = 1; n < a.p(); ++n) {
    dev = std::max(dev, std::abs(a(n) - b[static_cast<std::size_t>(n)]));
  }
  return dev;
}

}  // namespace

GaussTable gauss_table(const FieldPtr& field) {
  const auto& f = *field;
  std::vector<cplx> seq(static_cast<std::size_t>(f.order()));
  for (std::int64_t j = 0; j < f.order(); ++j) seq[static_cast<std::size_t>(j)] = f.e(f.exp_g(j));
  auto eps = fft::dft(seq, +1);
  for (auto& v : eps) v /= f.sqrt_p();
  return {field, std::move(eps)};
}

TraceFn gl6(const TraceFn& k) {
  const auto& field = k.field_ptr();
  const auto& f = *field;
  const auto kl6 = kl_all(6, field);
  // sum_x K(x) Kl_6(nx) is the multiplicative convolution of x -> K(1/x)
  // with Kl_6.
  std::vector<cplx> kinv(static_cast<std::size_t>(f.p()), 0.0);
  for (std::int64_t x = 1; x < f.p(); ++x) kinv[static_cast<std::size_t>(f.inv(x))] = k(x);
  const auto conv = mconv(TraceFn(field, std::move(kinv), "K(1/x)"), kl6.trace());
  std::vector<cplx> out(conv.values().begin(), conv.values().end());
  out[0] = gl6_at_zero(k, kl6.values);
  return TraceFn(field, std::move(out), "gl6(" + k.label() + ")");
}

TraceFn gl6_direct(const TraceFn& k) {
  const auto& field = k.field_ptr();
  const auto& f = *field;
  const auto kl6 = kl_all(6, field).values;
  std::vector<cplx> out(static_cast<std::size_t>(f.p()));
  for (std::int64_t n = 0; n < f.p(); ++n) {
    cplx acc = 0.0;
    for (std::int64_t x = 1; x < f.p(); ++x) acc += kl6[static_cast<std::size_t>(f.mul(n, x))] * k(x);
    out[static_cast<std::size_t>(n)] = acc / f.sqrt_p();
  }
  return TraceFn(field, std::move(out), "gl6(" + k.label() + ")");
}

double identity_kl2(const FieldPtr& field) {
  const double p = static_cast<double>(field->p());
  const auto lhs = gl6(kl_all(2, field).trace());
  auto rhs = kl_all(4, field).values;
  const double shift = std::pow(p, -2.5) + std::pow(p, -3.5);
  for (auto& v : rhs) v -= shift;
  return max_dev_on_units(lhs, rhs);
}

double identity_psi(std::int64_t a, const FieldPtr& field) {
  const auto& f = *field;
  if (f.reduce(a) == 0) throw Error(Errc::bad_param, "identity_psi needs a != 0 mod p");
  std::vector<cplx> psi(static_cast<std::size_t>(f.p()));
  for (std::int64_t x = 0; x < f.p(); ++x) psi[static_cast<std::size_t>(x)] = f.e(f.mul(a, x));
  const auto lhs = gl6(TraceFn(field, std::move(psi), "psi"));
  const auto kl5 = kl_all(5, field).values;
  const std::int64_t scale = f.reduce(-f.inv(a));
  const double shift = std::pow(static_cast<double>(f.p()), -3.0);
  std::vector<cplx> rhs(static_cast<std::size_t>(f.p()));
  for (std::int64_t n = 0; n < f.p(); ++n) {
    rhs[static_cast<std::size_t>(n)] = kl5[static_cast<std::size_t>(f.mul(scale, n))] + shift;
  }
  return max_dev_on_units(lhs, rhs);
}

double identity_ap(std::int64_t a, const FieldPtr& field) {
  const auto& f = *field;
  if (f.reduce(a) == 0) throw Error(Errc::bad_param, "identity_ap needs a != 0 mod p");
  std::vector<cplx> ind(static_cast<std::size_t>(f.p()), 0.0);
  ind[static_cast<std::size_t>(f.reduce(a))] = 1.0;
  const auto lhs = gl6(TraceFn(field, std::move(ind), "ap"));
  const auto kl6 = kl_all(6, field).values;
  double dev = 0.0;
  for (std::int64_t m = 0; m < f.p(); ++m) {
    const cplx rhs = kl6[static_cast<std::size_t>(f.mul(a, m))] / f.sqrt_p();
    dev = std::max(dev, std::abs(lhs(m) - rhs));
  }
  return dev;
}

Gl6Mellin gl6_via_mellin(const TraceFn& k) {
  const auto& field = k.field_ptr();
  const auto& f = *field;
  const auto eps = gauss_table(field).eps;
  const auto kt = mellin(k).coeffs;
  const double norm = 1.0 / std::sqrt(static_cast<double>(f.order()));
  std::vector<cplx> c(kt.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::pow(eps[i], 6) * kt[i];
  // conj(chi_k(g^j)) = e(-kj/(p-1))
  const auto seq = fft::dft(c, -1);
  std::vector<cplx> value(static_cast<std::size_t>(f.p()), 0.0);
  for (std::int64_t j = 0; j < f.order(); ++j) {
    value[static_cast<std::size_t>(f.exp_g(j))] = seq[static_cast<std::size_t>(j)] * norm;
  }
  const auto direct = gl6(k);
  std::vector<cplx> residual(static_cast<std::size_t>(f.p()), 0.0);
  Gl6Mellin out{TraceFn(field, value, "gl6_mellin(" + k.label() + ")"),
                TraceFn::zero(field), 0.0, c[0] * norm};
  for (std::int64_t n = 1; n < f.p(); ++n) {
    residual[static_cast<std::size_t>(n)] = value[static_cast<std::size_t>(n)] - direct(n);
    out.max_residual = std::max(out.max_residual, std::abs(residual[static_cast<std::size_t>(n)]));
  }
  out.residual = TraceFn(field, std::move(residual), "residual");
  return out;
}

}  // namespace tracelab
