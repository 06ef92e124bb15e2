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

// Number-theoretic transforms modulo word-sized primes p = c 2^k + 1.
namespace tracelab::ntt {

struct Modulus {
  std::uint32_t p;
  std::uint32_t root;  // primitive root mod p
};

/// Primes with 2^25 | p - 1; their product exceeds 2^149.
const std::vector<Modulus>& moduli();

/// In-place cyclic transform of length a.size() (a power of two dividing
/// p - 1); inverse includes the 1/n scaling.
void transform(std::vector<std::uint32_t>& a, const Modulus& m, bool inverse);

/// First `keep` coefficients of a^2 mod p.
std::vector<std::uint32_t> square_truncated(const std::vector<std::uint32_t>& a, std::size_t keep,
                                            const Modulus& m);

}  // namespace tracelab::ntt
