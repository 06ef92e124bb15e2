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
#include <vector>

#include "tracelab/ffield.hpp"

// Exact-length complex DFTs. Power-of-two lengths use an iterative radix-2
// transform; every other length goes through Bluestein's chirp-z identity
// jk = (j^2 + k^2 - (k-j)^2) / 2, which turns the DFT into a power-of-two
// convolution.
namespace tracelab::fft {

/// out[k] = sum_j in[j] * exp(sign * 2 pi i j k / n), sign = +1 or -1.
std::vector<cplx> dft(std::span<const cplx> in, int sign);

/// Cyclic convolution of two sequences of equal length n:
/// out[s] = sum_j a[j] * b[(s - j) mod n].
std::vector<cplx> cyclic_convolve(std::span<const cplx> a, std::span<const cplx> b);

}  // namespace tracelab::fft
