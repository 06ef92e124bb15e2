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

#include "tracelab/correlation.hpp"

#include <algorithm>
#include <cmath>

#include "tracelab/error.hpp"
#include "tracelab/kloosterman.hpp"
#include "tracelab/parallel.hpp"
#include "tracelab/rng.hpp"
#include "tracelab/tracezoo.hpp"

namespace tracelab {
namespace {

void require_unit(const PrimeField& f, std::int64_t v, const char* name) {
  if (f.reduce(v) == 0) throw Error(Errc::bad_param, std::string(name) + " must be nonzero mod p");
}

std::vector<cplx> kl2_values(const FieldPtr& field) { return kl_all(2, field).values; }

TraceFn z_direct(const TraceFn& k, const std::vector<cplx>& kl2, std::int64_t alpha,
                 std::int64_t beta) {
  const auto& f = k.field();
  const std::int64_t p = f.p();
  auto kl = [&](std::int64_t a) { return kl2[static_cast<std::size_t>(a)]; };
  std::vector<cplx> z(static_cast<std::size_t>(p));
  for (std::int64_t v = 0; v < p; ++v) {
    cplx acc = 0.0;
    for (std::int64_t x = 1; x < p; ++x) {
      const std::int64_t xv = f.mul(x, v);
      acc += k(xv) * kl(f.mul(alpha, xv)) * kl(f.mul(beta, x));
    }
    z[static_cast<std::size_t>(v)] = acc / f.sqrt_p();
  }
  return TraceFn(k.field_ptr(), std::move(z), "Z(" + k.label() + ")");
}

cplx q_sum_direct(const TraceFn& k, const TraceFn& kp, const std::vector<cplx>& kl2,
                  const QSumParams& s) {
  const auto& f = k.field();
  const std::int64_t p = f.p();
  const auto l = l_func(k, s.alpha, s.beta);
  const auto lp = l_func(kp, s.alphap, s.betap);
  const std::int64_t freq = f.mul(f.inv(s.k), s.n);
  cplx total = 0.0;
  for (std::int64_t u = 1; u < p; ++u) {
    const std::int64_t gu = f.mul(s.gamma, f.inv(u));
    for (std::int64_t up = 1; up < p; ++up) {
      const std::int64_t gup = f.mul(s.gammap, f.inv(up));
      cplx inner = 0.0;
      for (std::int64_t v = 0; v < p; ++v) {
        inner += kl2[static_cast<std::size_t>(f.mul(gu, v))] *
                 kl2[static_cast<std::size_t>(f.mul(gup, v))] * f.e(f.mul(freq, v));
      }
      total += l(u) * std::conj(lp(up)) * inner;
    }
  }
  return total / f.sqrt_p();
}

cplx q_sum_corr(const TraceFn& k, const TraceFn& kp, const std::vector<cplx>& kl2,
                const QSumParams& s) {
  const auto& f = k.field();
  const auto z = z_direct(k, kl2, s.alpha, f.mul(s.beta, s.gamma));
  const auto zp = z_direct(kp, kl2, s.alphap, f.mul(s.betap, s.gammap));
  return f.sqrt_p() * corr(z, zp, f.mul(f.inv(s.k), s.n));
}

}  // namespace

TraceFn l_func(const TraceFn& k, std::int64_t alpha, std::int64_t beta) {
  const auto& f = k.field();
  require_unit(f, alpha, "alpha");
  require_unit(f, beta, "beta");
  const auto kl2 = kl2_values(k.field_ptr());
  std::vector<cplx> prod(static_cast<std::size_t>(f.p()));
  for (std::int64_t a = 0; a < f.p(); ++a) {
    prod[static_cast<std::size_t>(a)] = k(a) * kl2[static_cast<std::size_t>(f.mul(alpha, a))];
  }
  const auto hat = fourier(TraceFn(k.field_ptr(), std::move(prod), "K.Kl2"));
  std::vector<cplx> l(static_cast<std::size_t>(f.p()));
  for (std::int64_t u = 0; u < f.p(); ++u) l[static_cast<std::size_t>(u)] = hat(-f.mul(beta, u));
  return TraceFn(k.field_ptr(), std::move(l), "L(" + k.label() + ")");
}

TraceFn l_func_fourier_route(const TraceFn& k, std::int64_t alpha, std::int64_t beta) {
  const auto& f = k.field();
  require_unit(f, alpha, "alpha");
  require_unit(f, beta, "beta");
  const auto hat = fourier(k);
  const std::int64_t p = f.p();
  std::vector<cplx> l(static_cast<std::size_t>(p));
  for (std::int64_t u = 0; u < p; ++u) {
    cplx acc = 0.0;
    for (std::int64_t b = 0; b < p; ++b) {
      const std::int64_t w = f.reduce(b + f.mul(beta, u));
      if (w == 0) continue;
      acc += hat(b) * f.e(f.mul(alpha, f.inv(w)));
    }
    l[static_cast<std::size_t>(u)] = acc / f.sqrt_p();
  }
  return TraceFn(k.field_ptr(), std::move(l), "L(" + k.label() + ")");
}

LHatCheck l_hat_check(const TraceFn& k, std::int64_t alpha, std::int64_t beta) {
  const auto& f = k.field();
  const auto lhat = fourier(l_func(k, alpha, beta));
  const auto kl2 = kl2_values(k.field_ptr());
  const std::int64_t beta_bar = f.inv(beta);
  LHatCheck out;
  for (std::int64_t x = 0; x < f.p(); ++x) {
    const std::int64_t y = f.mul(x, beta_bar);
    const cplx rhs = k(y) * kl2[static_cast<std::size_t>(f.mul(alpha, y))];
    if (x == 0) {
      out.lhat_at_zero = lhat(0);
      out.rhs_at_zero = rhs;
    } else {
      out.max_deviation = std::max(out.max_deviation, std::abs(lhat(x) - rhs));
    }
  }
  return out;
}

TraceFn z_func(const TraceFn& k, std::int64_t alpha, std::int64_t beta) {
  require_unit(k.field(), alpha, "alpha");
  require_unit(k.field(), beta, "beta");
  return z_direct(k, kl2_values(k.field_ptr()), alpha, beta);
}

TraceFn z_func_plancherel(const TraceFn& k, std::int64_t alpha, std::int64_t beta,
                          std::int64_t gamma) {
  const auto& f = k.field();
  require_unit(f, gamma, "gamma");
  const auto kl2 = kl2_values(k.field_ptr());
  std::vector<cplx> mv(static_cast<std::size_t>(f.p()));
  for (std::int64_t u = 0; u < f.p(); ++u) mv[static_cast<std::size_t>(u)] = kl2[static_cast<std::size_t>(f.mul(gamma, u))];
  const TraceFn m(k.field_ptr(), std::move(mv), "M");
  const auto l = l_func(k, alpha, beta);
  const auto conv = mconv(m, l);
  std::vector<cplx> w(conv.values().begin(), conv.values().end());
  w[0] = mconv_origin(m, l);
  auto z = fourier(TraceFn(k.field_ptr(), std::move(w), "M*L"));
  return TraceFn(k.field_ptr(), std::vector<cplx>(z.values().begin(), z.values().end()),
                 "Z(" + k.label() + ")");
}

cplx corr(const TraceFn& z, const TraceFn& zp, std::int64_t delta) {
  require_same_field(z, zp);
  cplx total = 0.0;
  for (std::int64_t v = 0; v < z.p(); ++v) total += z(v) * std::conj(zp(v - delta));
  return total;
}

QSumResult q_sum_check(const TraceFn& k, const TraceFn& kp, const QSumParams& s) {
  require_same_field(k, kp);
  const auto& f = k.field();
  for (const auto v : {s.alpha, s.beta, s.gamma, s.alphap, s.betap, s.gammap}) {
    require_unit(f, v, "q-sum parameter");
  }
  require_unit(f, s.k, "k");
  const auto kl2 = kl2_values(k.field_ptr());
  const auto ku = k.restricted_to_units();
  const auto kpu = kp.restricted_to_units();
  QSumResult out;
  out.direct = q_sum_direct(ku, kpu, kl2, s);
  out.via_corr = q_sum_corr(ku, kpu, kl2, s);
  out.deviation = std::abs(out.direct - out.via_corr);
  if (k(0) != 0.0 || kp(0) != 0.0) {
    out.origin_gap = std::abs(q_sum_direct(k, kp, kl2, s) - q_sum_corr(k, kp, kl2, s));
  }
  return out;
}

ScanReport sqrt_cancel_scan(const TraceFn& k, const TraceFn& kp, const ScanConfig& config) {
  require_same_field(k, kp);
  const auto& f = k.field();
  const std::int64_t p = f.p();
  const double sqrt_p = f.sqrt_p();
  const auto kl2 = kl2_values(k.field_ptr());
  const bool same_k = std::equal(k.values().begin(), k.values().end(), kp.values().begin());

  ScanReport report;
  report.p = p;
  try {
    report.torus = torus_detect(k).members;
  } catch (const Error&) {
    // K vanishes on F_p^x; no scaling symmetry to speak of.
  }
  auto in_torus = [&](std::int64_t lambda) {
    return std::binary_search(report.torus.begin(), report.torus.end(), lambda);
  };

  const std::size_t diag =
      config.diag_trials > 0 ? config.diag_trials : (config.trials + 4) / 5;
  const std::size_t total = config.trials + diag;
  report.rows.resize(total);
  parallel_for(total, config.parallel, [&](std::size_t i) {
    SplitMix64 rng(config.seed, i);
    auto unit = [&] { return rng.uniform(1, p - 1); };
    ScanRow row;
    row.diagonal_kind = i >= config.trials;
    row.alpha = unit();
    row.beta = unit();
    row.gamma = unit();
    if (row.diagonal_kind) {
      row.delta = 0;
      row.alphap = row.alpha;
      row.gammap = unit();
      row.betap = f.mul(f.mul(row.beta, row.gamma), f.inv(row.gammap));
    } else {
      row.delta = unit();
      row.alphap = unit();
      row.betap = unit();
      row.gammap = unit();
    }
    const auto z = z_direct(k, kl2, row.alpha, f.mul(row.beta, row.gamma));
    const auto zp = z_direct(kp, kl2, row.alphap, f.mul(row.betap, row.gammap));
    row.value = corr(z, zp, row.delta);
    row.abs = std::abs(row.value);
    row.ratio_sqrtq = row.abs / sqrt_p;
    row.diagonal_flag =
        row.delta == 0 && same_k &&
        f.mul(row.alpha, f.mul(row.betap, row.gammap)) ==
            f.mul(row.alphap, f.mul(row.beta, row.gamma)) &&
        in_torus(f.mul(row.alpha, f.inv(row.alphap)));
    report.rows[i] = row;
  });

  cplx diag_sum = 0.0;
  for (const auto& row : report.rows) {
    if (row.diagonal_flag) diag_sum += row.value;
  }
  if (std::abs(diag_sum) > 0.0) report.fitted_c = diag_sum / std::abs(diag_sum);

  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = report.rows[i];
    bool bad = false;
    if (row.diagonal_flag) {
      const double dev = std::abs(row.value - report.fitted_c.value_or(1.0) * static_cast<double>(p));
      report.max_diag_deviation = std::max(report.max_diag_deviation, dev);
      bad = dev > config.diag_threshold * sqrt_p;
    } else {
      report.max_offdiag_ratio = std::max(report.max_offdiag_ratio, row.ratio_sqrtq);
      bad = row.ratio_sqrtq > config.offdiag_threshold;
    }
    if (bad) report.offending.push_back(i);
  }
  report.passed = report.offending.empty();
  return report;
}

}  // namespace tracelab
