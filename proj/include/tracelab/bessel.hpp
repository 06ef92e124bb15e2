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

namespace tracelab {

/// J_nu(x) for integer nu >= 0 and x >= 0. Below the switch point the
/// ascending series is summed in binary128 (its terms reach ~1e10 near x = 30,
/// so double would lose ten digits to cancellation); above it the Hankel
/// expansion is truncated at its smallest term.
class BesselEvaluator {
 public:
  explicit BesselEvaluator(int nu = 11, double switch_point = 30.0, int series_terms = 200,
                           int asymptotic_terms = 60);

  int order() const noexcept { return nu_; }
  double switch_point() const noexcept { return x0_; }

  double operator()(double x) const;
  double series(double x) const;
  double asymptotic(double x) const;

 private:
  int nu_;
  double x0_;
  int series_terms_;
  int asymptotic_terms_;
};

double bessel_j(int nu, double x);

}  // namespace tracelab
