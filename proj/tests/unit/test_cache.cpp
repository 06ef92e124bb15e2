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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "tracelab/cache.hpp"

using namespace tracelab;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("tracelab-test-" + tag + "-" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void poke(const fs::path& file, std::size_t offset, unsigned char byte) {
  std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
  f.seekp(static_cast<std::streamoff>(offset));
  f.put(static_cast<char>(byte));
}

}  // namespace

TEST_SUITE("cache") {
  TEST_CASE("tau round trip") {
    TempDir dir("tau");
    const auto built = tau_table(1000);
    const auto file = dir.path / "t.tlab";
    cache::write_tau(file, built);
    const auto back = cache::read_tau(file);
    REQUIRE(back.N == 1000);
    for (std::int64_t n = 1; n <= 1000; ++n) {
      CHECK(back.tau[static_cast<std::size_t>(n)] == built.tau[static_cast<std::size_t>(n)]);
      CHECK(back.lam[static_cast<std::size_t>(n)] == built.lam[static_cast<std::size_t>(n)]);
    }
  }

  TEST_CASE("damaged files") {
    TempDir dir("bad");
    const auto file = dir.path / "t.tlab";
    cache::write_tau(file, tau_table(200));
    const auto size = fs::file_size(file);

    SUBCASE("truncated") {
      fs::resize_file(file, size / 2);
      CHECK_ERRC(cache::read_tau(file), Errc::cache_corrupt);
    }
    SUBCASE("empty") {
      fs::resize_file(file, 0);
      CHECK_ERRC(cache::read_tau(file), Errc::cache_corrupt);
    }
    SUBCASE("magic") {
      poke(file, 0, 'X');
      CHECK_ERRC(cache::read_tau(file), Errc::cache_corrupt);
    }
    SUBCASE("kind") {
      poke(file, 6, 2);
      CHECK_ERRC(cache::read_tau(file), Errc::cache_corrupt);
    }
    SUBCASE("payload bit flip") {
      poke(file, size / 2, 0xA5);
      CHECK_ERRC(cache::read_tau(file), Errc::cache_corrupt);
    }
    SUBCASE("version") {
      poke(file, 4, 2);
      try {
        (void)cache::read_tau(file);
        FAIL("expected CacheVersion");
      } catch (const Error& e) {
        CHECK(e.code() == Errc::cache_version);
        const std::string msg = e.what();
        CHECK(msg.find('2') != std::string::npos);
        CHECK(msg.find('1') != std::string::npos);
      }
    }
    SUBCASE("missing") { CHECK_ERRC(cache::read_tau(dir.path / "nope.tlab"), Errc::cache_corrupt); }
  }

  TEST_CASE("load_or_build recomputes bad files") {
    TempDir dir("lob");
    std::ostringstream log;
    const auto first = cache::load_or_build_tau(300, dir.path, &log);
    const auto file = dir.path / "tau-300.tlab";
    REQUIRE(fs::exists(file));
    fs::resize_file(file, 40);
    const auto again = cache::load_or_build_tau(300, dir.path, &log);
    CHECK(again.tau == first.tau);
    CHECK(log.str().find("recomputing") != std::string::npos);
    // The rewritten file is valid again.
    CHECK(cache::read_tau(file).tau == first.tau);

    poke(file, 4, 9);
    std::ostringstream log2;
    CHECK(cache::load_or_build_tau(300, dir.path, &log2).tau == first.tau);
    CHECK(log2.str().find("version") != std::string::npos);
  }

  TEST_CASE("empty dir disables caching") {
    std::ostringstream log;
    const auto t = cache::load_or_build_tau(50, {}, &log);
    CHECK(t.N == 50);
    CHECK(log.str().empty());
  }

  TEST_CASE("kl round trip and mismatch") {
    TempDir dir("kl");
    const auto field = make_field(31);
    const auto kl = kl_all(3, field);
    const auto file = dir.path / "k.tlab";
    cache::write_kl(file, kl);
    const auto back = cache::read_kl(file, field, 3);
    CHECK(back.values == kl.values);
    CHECK(back.k == 3);
    CHECK_ERRC(cache::read_kl(file, field, 2), Errc::cache_corrupt);
    CHECK_ERRC(cache::read_kl(file, make_field(37), 3), Errc::cache_corrupt);
    CHECK_ERRC(cache::read_tau(file), Errc::cache_corrupt);
    const auto via = cache::load_or_build_kl(3, field, dir.path);
    CHECK(via.values == kl.values);
    CHECK(fs::exists(dir.path / "kl-31-3.tlab"));
  }

  TEST_CASE("sym2 round trip") {
    TempDir dir("sym2");
    auto gl2 = std::make_shared<const HeckeGL2>(tau_table(400));
    const HeckeGL3 table(gl2, 400);
    const auto file = dir.path / "s.tlab";
    cache::write_sym2(file, table);
    CHECK(cache::read_sym2(file, 400) == table.rows());
    CHECK_ERRC(cache::read_sym2(file, 399), Errc::cache_corrupt);
    const auto via = cache::load_or_build_sym2(gl2, 400, dir.path);
    CHECK(via->rows() == table.rows());
    const auto cached = cache::load_or_build_sym2(gl2, 400, dir.path);
    CHECK(cached->rows() == table.rows());
    CHECK((*cached)(3, 7) == table(3, 7));
  }

  TEST_CASE("resolve_dir") {
    const char* old = std::getenv("TRACELAB_CACHE");
    const std::string saved = old ? old : "";
    ::unsetenv("TRACELAB_CACHE");
    CHECK(cache::resolve_dir(std::nullopt) == fs::path(".tracelab-cache"));
    CHECK(cache::resolve_dir(fs::path("/x/y")) == fs::path("/x/y"));
    ::setenv("TRACELAB_CACHE", "/env/dir", 1);
    CHECK(cache::resolve_dir(fs::path("/x/y")) == fs::path("/env/dir"));
    if (old) {
      ::setenv("TRACELAB_CACHE", saved.c_str(), 1);
    } else {
      ::unsetenv("TRACELAB_CACHE");
    }
  }
}
