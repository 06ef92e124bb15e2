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
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

#include "tracelab/hecke.hpp"
#include "tracelab/kloosterman.hpp"

// Binary table cache. Layout, all integers little-endian:
//   "TLAB" | u16 version | u8 kind | u64 p or N | u8 k (0 if unused) |
//   payload | u32 CRC-32 of payload
// tau payload: per n = 1..N, u32 byte count, u8 sign (1 = negative),
// magnitude bytes little-endian. kl payload: (re, im) f64 pairs for n = 0..p-1.
// sym2 payload: f64 lambda(r, n) row by row, r = 1.., n = 1..N / r^2.
namespace tracelab::cache {

enum class Kind : std::uint8_t { tau = 1, kl = 2, sym2 = 3 };

inline constexpr std::uint16_t kVersion = 1;

void write_tau(const std::filesystem::path& file, const HeckeGL2& table);
/// Throws CacheCorrupt (magic, size, CRC, kind) or CacheVersion.
HeckeGL2 read_tau(const std::filesystem::path& file);

void write_kl(const std::filesystem::path& file, const KloostermanTable& table);
/// Also CacheCorrupt when the stored p or k differ from the request.
KloostermanTable read_kl(const std::filesystem::path& file, const FieldPtr& field, int k);

void write_sym2(const std::filesystem::path& file, const HeckeGL3& table);
std::vector<std::vector<double>> read_sym2(const std::filesystem::path& file, std::int64_t bound);

/// $TRACELAB_CACHE if set, else `configured`, else ".tracelab-cache".
std::filesystem::path resolve_dir(const std::optional<std::filesystem::path>& configured);

/// Loads from `dir` when a valid file exists; otherwise computes and writes
/// it. Corrupt or wrong-version files are reported to `log` and replaced.
/// An empty dir disables caching.
HeckeGL2 load_or_build_tau(std::int64_t N, const std::filesystem::path& dir,
                           std::ostream* log = nullptr);
KloostermanTable load_or_build_kl(int k, const FieldPtr& field, const std::filesystem::path& dir,
                                  std::ostream* log = nullptr);
std::shared_ptr<const HeckeGL3> load_or_build_sym2(std::shared_ptr<const HeckeGL2> gl2,
                                                   std::int64_t bound,
                                                   const std::filesystem::path& dir,
                                                   std::ostream* log = nullptr);

}  // namespace tracelab::cache
