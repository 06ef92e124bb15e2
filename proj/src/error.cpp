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

#include "tracelab/error.hpp"

namespace tracelab {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::not_prime: return "NotPrime";
    case Errc::too_large: return "TooLarge";
    case Errc::zero_inverse: return "ZeroInverse";
    case Errc::zero_log: return "ZeroLog";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::oracle_too_large: return "OracleTooLarge";
    case Errc::bad_divisibility: return "BadDivisibility";
    case Errc::bad_param: return "BadParam";
    case Errc::table_too_small: return "TableTooSmall";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::cache_corrupt: return "CacheCorrupt";
    case Errc::cache_version: return "CacheVersion";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace tracelab
