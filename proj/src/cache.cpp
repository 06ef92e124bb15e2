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

#include "tracelab/cache.hpp"

#include <array>
#include <bit>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iterator>
#include <ostream>
#include <string>

#include <boost/crc.hpp>

#include "tracelab/error.hpp"

namespace tracelab::cache {
namespace {

std::uint32_t crc32(const std::vector<std::uint8_t>& bytes) {
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  return crc.checksum();
}

class Writer {
 public:
  template <class T>
  void put(T value) {
    using U = std::make_unsigned_t<T>;
    auto u = static_cast<U>(value);
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      bytes.push_back(static_cast<std::uint8_t>(u & 0xffu));
      if constexpr (sizeof(T) > 1) u = static_cast<U>(u >> 8);
    }
  }
  void put_f64(double v) { put(std::bit_cast<std::uint64_t>(v)); }
  void put_raw(const std::vector<std::uint8_t>& raw) {
    bytes.insert(bytes.end(), raw.begin(), raw.end());
  }

  std::vector<std::uint8_t> bytes;
};

class Reader {
 public:
  Reader(const std::vector<std::uint8_t>& bytes, std::size_t begin, std::size_t end,
         const std::string& file)
      : bytes_(bytes), pos_(begin), end_(end), file_(file) {}

  template <class T>
  T get() {
    need(sizeof(T));
    using U = std::make_unsigned_t<T>;
    U u = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      u = static_cast<U>(u | static_cast<U>(static_cast<U>(bytes_[pos_ + i]) << (8 * i)));
    }
    pos_ += sizeof(T);
    return static_cast<T>(u);
  }
  double get_f64() { return std::bit_cast<double>(get<std::uint64_t>()); }
  const std::uint8_t* take(std::size_t n) {
    need(n);
    const auto* p = bytes_.data() + pos_;
    pos_ += n;
    return p;
  }
  bool done() const noexcept { return pos_ == end_; }

 private:
  void need(std::size_t n) const {
    if (end_ - pos_ < n) throw Error(Errc::cache_corrupt, file_ + ": payload truncated");
  }

  const std::vector<std::uint8_t>& bytes_;
  std::size_t pos_, end_;
  std::string file_;
};

constexpr std::array<char, 4> kMagic = {'T', 'L', 'A', 'B'};
constexpr std::size_t kHeader = 4 + 2 + 1 + 8 + 1;

void write_file(const std::filesystem::path& file, Kind kind, std::uint64_t size, std::uint8_t k,
                const std::vector<std::uint8_t>& payload) {
  Writer w;
  for (const char c : kMagic) w.put(static_cast<std::uint8_t>(c));
  w.put(kVersion);
  w.put(static_cast<std::uint8_t>(kind));
  w.put(size);
  w.put(k);
  w.put_raw(payload);
  w.put(crc32(payload));
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  // Write then rename, so a reader never sees a half-written table.
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(w.bytes.data()),
              static_cast<std::streamsize>(w.bytes.size()));
    if (!out) throw Error(Errc::bad_param, "cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

struct Loaded {
  std::vector<std::uint8_t> bytes;
  std::uint64_t size = 0;
  std::uint8_t k = 0;
};

Loaded read_file(const std::filesystem::path& file, Kind kind) {
  const std::string name = file.string();
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(Errc::cache_corrupt, name + ": cannot open");
  Loaded out;
  out.bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  if (out.bytes.size() < kHeader + 4) throw Error(Errc::cache_corrupt, name + ": file truncated");
  if (std::memcmp(out.bytes.data(), kMagic.data(), kMagic.size()) != 0) {
    throw Error(Errc::cache_corrupt, name + ": bad magic");
  }
  Reader header(out.bytes, 4, kHeader, name);
  const auto version = header.get<std::uint16_t>();
  if (version != kVersion) {
    throw Error(Errc::cache_version, name + ": cache version " + std::to_string(version) +
                                         ", this build reads version " +
                                         std::to_string(kVersion));
  }
  if (header.get<std::uint8_t>() != static_cast<std::uint8_t>(kind)) {
    throw Error(Errc::cache_corrupt, name + ": wrong table kind");
  }
  out.size = header.get<std::uint64_t>();
  out.k = header.get<std::uint8_t>();
  const std::size_t end = out.bytes.size() - 4;
  const std::vector<std::uint8_t> payload(out.bytes.begin() + kHeader, out.bytes.begin() + end);
  Reader tail(out.bytes, end, out.bytes.size(), name);
  if (tail.get<std::uint32_t>() != crc32(payload)) {
    throw Error(Errc::cache_corrupt, name + ": CRC mismatch");
  }
  return out;
}

std::vector<std::uint8_t> magnitude_bytes(const BigInt& v) {
  std::vector<std::uint8_t> out;
  boost::multiprecision::export_bits(abs(v), std::back_inserter(out), 8, false);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

template <class Build, class Read, class Write>
auto load_or_build(const std::filesystem::path& dir, const std::string& name, std::ostream* log,
                   Build build, Read read, Write write) -> decltype(build()) {
  if (dir.empty()) return build();
  const auto file = dir / name;
  if (std::filesystem::exists(file)) {
    try {
      return read(file);
    } catch (const Error& e) {
      if (e.code() != Errc::cache_corrupt && e.code() != Errc::cache_version) throw;
      if (log) *log << "cache: " << e.what() << "; recomputing\n";
    }
  }
  auto value = build();
  try {
    write(file, value);
  } catch (const std::exception& e) {
    if (log) *log << "cache: cannot store " << file.string() << ": " << e.what() << "\n";
  }
  return value;
}

}  // namespace

void write_tau(const std::filesystem::path& file, const HeckeGL2& table) {
  Writer w;
  for (std::int64_t n = 1; n <= table.N; ++n) {
    const auto& t = table.tau[static_cast<std::size_t>(n)];
    const auto mag = magnitude_bytes(t);
    w.put(static_cast<std::uint32_t>(mag.size()));
    w.put(static_cast<std::uint8_t>(t < 0 ? 1 : 0));
    w.put_raw(mag);
  }
  write_file(file, Kind::tau, static_cast<std::uint64_t>(table.N), 0, w.bytes);
}

HeckeGL2 read_tau(const std::filesystem::path& file) {
  const auto loaded = read_file(file, Kind::tau);
  if (loaded.size > static_cast<std::uint64_t>(kTauCap)) {
    throw Error(Errc::cache_corrupt, file.string() + ": N above the tau cap");
  }
  HeckeGL2 table;
  table.N = static_cast<std::int64_t>(loaded.size);
  table.tau.assign(static_cast<std::size_t>(table.N + 1), 0);
  Reader r(loaded.bytes, kHeader, loaded.bytes.size() - 4, file.string());
  for (std::int64_t n = 1; n <= table.N; ++n) {
    const auto len = r.get<std::uint32_t>();
    const auto sign = r.get<std::uint8_t>();
    if (len > 32 || sign > 1) throw Error(Errc::cache_corrupt, file.string() + ": bad tau record");
    const auto* data = r.take(len);
    BigInt v = 0;
    if (len > 0) boost::multiprecision::import_bits(v, data, data + len, 8, false);
    table.tau[static_cast<std::size_t>(n)] = sign ? BigInt(-v) : v;
  }
  if (!r.done()) throw Error(Errc::cache_corrupt, file.string() + ": trailing payload");
  table.normalize();
  return table;
}

void write_kl(const std::filesystem::path& file, const KloostermanTable& table) {
  Writer w;
  for (const auto& v : table.values) {
    w.put_f64(v.real());
    w.put_f64(v.imag());
  }
  write_file(file, Kind::kl, static_cast<std::uint64_t>(table.field->p()),
             static_cast<std::uint8_t>(table.k), w.bytes);
}

KloostermanTable read_kl(const std::filesystem::path& file, const FieldPtr& field, int k) {
  const auto loaded = read_file(file, Kind::kl);
  if (loaded.size != static_cast<std::uint64_t>(field->p()) || loaded.k != k) {
    throw Error(Errc::cache_corrupt, file.string() + ": stored p or k differ from the request");
  }
  Reader r(loaded.bytes, kHeader, loaded.bytes.size() - 4, file.string());
  std::vector<cplx> values(static_cast<std::size_t>(field->p()));
  for (auto& v : values) {
    const double re = r.get_f64();
    v = {re, r.get_f64()};
  }
  if (!r.done()) throw Error(Errc::cache_corrupt, file.string() + ": trailing payload");
  return {field, k, std::move(values)};
}

void write_sym2(const std::filesystem::path& file, const HeckeGL3& table) {
  Writer w;
  const auto& rows = table.rows();
  for (std::size_t r = 1; r < rows.size(); ++r) {
    for (std::size_t n = 1; n < rows[r].size(); ++n) w.put_f64(rows[r][n]);
  }
  write_file(file, Kind::sym2, static_cast<std::uint64_t>(table.bound()), 0, w.bytes);
}

std::vector<std::vector<double>> read_sym2(const std::filesystem::path& file,
                                           std::int64_t bound) {
  const auto loaded = read_file(file, Kind::sym2);
  if (loaded.size != static_cast<std::uint64_t>(bound)) {
    throw Error(Errc::cache_corrupt, file.string() + ": stored bound differs from the request");
  }
  Reader r(loaded.bytes, kHeader, loaded.bytes.size() - 4, file.string());
  std::vector<std::vector<double>> rows(1);
  for (std::int64_t row = 1; row * row <= bound; ++row) {
    std::vector<double> values(static_cast<std::size_t>(bound / (row * row) + 1), 0.0);
    for (std::size_t n = 1; n < values.size(); ++n) values[n] = r.get_f64();
    rows.push_back(std::move(values));
  }
  if (!r.done()) throw Error(Errc::cache_corrupt, file.string() + ": trailing payload");
  return rows;
}

std::filesystem::path resolve_dir(const std::optional<std::filesystem::path>& configured) {
  if (const char* env = std::getenv("TRACELAB_CACHE"); env != nullptr && *env != '\0') return env;
  if (configured) return *configured;
  return ".tracelab-cache";
}

HeckeGL2 load_or_build_tau(std::int64_t N, const std::filesystem::path& dir, std::ostream* log) {
  return load_or_build(
      dir, "tau-" + std::to_string(N) + ".tlab", log, [&] { return tau_table(N); },
      [&](const std::filesystem::path& f) {
        auto t = read_tau(f);
        if (t.N != N) throw Error(Errc::cache_corrupt, f.string() + ": stored N differs");
        return t;
      },
      [](const std::filesystem::path& f, const HeckeGL2& t) { write_tau(f, t); });
}

KloostermanTable load_or_build_kl(int k, const FieldPtr& field, const std::filesystem::path& dir,
                                  std::ostream* log) {
  return load_or_build(
      dir, "kl-" + std::to_string(field->p()) + "-" + std::to_string(k) + ".tlab", log,
      [&] { return kl_all(k, field); },
      [&](const std::filesystem::path& f) { return read_kl(f, field, k); },
      [](const std::filesystem::path& f, const KloostermanTable& t) { write_kl(f, t); });
}

std::shared_ptr<const HeckeGL3> load_or_build_sym2(std::shared_ptr<const HeckeGL2> gl2,
                                                   std::int64_t bound,
                                                   const std::filesystem::path& dir,
                                                   std::ostream* log) {
  using Ptr = std::shared_ptr<const HeckeGL3>;
  return load_or_build(
      dir, "sym2-" + std::to_string(bound) + ".tlab", log,
      [&]() -> Ptr { return std::make_shared<const HeckeGL3>(gl2, bound); },
      [&](const std::filesystem::path& f) -> Ptr {
        return std::make_shared<const HeckeGL3>(gl2, bound, read_sym2(f, bound));
      },
      [](const std::filesystem::path& f, const Ptr& t) { write_sym2(f, *t); });
}

}  // namespace tracelab::cache
