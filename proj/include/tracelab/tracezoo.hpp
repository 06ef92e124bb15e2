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
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tracelab/xforms.hpp"

namespace tracelab {

struct TraceSpec;
using SpecPtr = std::shared_ptr<const TraceSpec>;

namespace spec {
struct AdditiveChar { std::int64_t a; };           // x -> e(ax/p)
struct MultChar { std::int64_t k; };               // g^j -> e(kj/(p-1)), 0 at 0
struct Kloosterman { int k; };                     // Kl_k
struct IndicatorAp { std::int64_t a; };            // x -> [x = a mod p]
struct PullbackScale { std::int64_t lambda; SpecPtr inner; };   // x -> K(lambda x)
struct PullbackInvScale { std::int64_t beta; SpecPtr inner; };  // x -> K(beta / x), 0 at 0
struct Product { SpecPtr left, right; };
struct SymPower { int k; std::int64_t lambda; };   // sym_k of theta with 2cos(theta) = Kl_2(lambda x)
}  // namespace spec

/// A recipe for a trace function. The canonical text form is
///   kl3 | psi:2 | chi:5 | ap:3 | sym:2,4 | prod(A,B) | scale(3,A) | inv(5,A)
/// where sym:k,lambda is the k-th symmetric power of [x lambda]^* Kl_2.
struct TraceSpec {
  using Node = std::variant<spec::AdditiveChar, spec::MultChar, spec::Kloosterman,
                            spec::IndicatorAp, spec::PullbackScale, spec::PullbackInvScale,
                            spec::Product, spec::SymPower>;
  Node node;
};

/// Throws BadParam on malformed text.
TraceSpec parse_spec(std::string_view text);
std::string to_string(const TraceSpec& spec);

/// Throws BadParam for out-of-range parameters (character exponent outside
/// 0..p-2, zero pullback scalars, Kloosterman rank < 1).
TraceFn realize(const TraceSpec& spec, const FieldPtr& field);

struct TorusResult {
  std::vector<std::int64_t> members;  // sorted
  bool is_subgroup = false;
};

/// All lambda in F_p^x with K(lambda x) = c K(x) on F_p^x for a unimodular c,
/// up to `tol`; tol <= 0 selects the default 1e-6 * sup_norm. This is trace
/// level proportionality, a computable stand-in for geometric isomorphism of
/// [x lambda]^* F with F.
TorusResult torus_detect(const TraceFn& k, double tol = 0.0);

}  // namespace tracelab
