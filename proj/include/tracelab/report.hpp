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
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tracelab/correlation.hpp"
#include "tracelab/kloosterman.hpp"
#include "tracelab/twisted.hpp"
#include "tracelab/voronoi2.hpp"

namespace tracelab::report {

using Cell = std::variant<std::int64_t, double, bool, std::string>;

/// A flat result table. CSV puts `meta` in leading "# key: value" lines and
/// prints doubles with 17 significant digits; JSON puts `meta` in top-level
/// keys and the rows under "rows", or flattens a record table into one object.
struct Table {
  std::vector<std::pair<std::string, Cell>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  bool record = false;  // exactly one row, printed as an object in JSON
};

enum class Format { csv, json };

/// "%.17g"
std::string format_double(double v);

void write(std::ostream& out, const Table& table, Format format);
void write_csv(std::ostream& out, const Table& table);
void write_json(std::ostream& out, const Table& table);

/// n, re, im, abs for n = 0..p-1.
Table kl_table(const KloostermanTable& kl);

/// One row per scanned tuple in the correlation schema.
Table scan_table(const ScanReport& scan);
/// max ratio, diagonal deviation, fitted c and offending row indices.
std::string scan_summary(const ScanReport& scan);

Table twisted_record(std::int64_t p, const std::string& spec, double X, double Z,
                     std::int64_t r_max, const TwistedSum& sum);

/// Rows p, X, |S|, |S|/X, log-ratio, envelope, in_theorem_range; the slope
/// and a note that no exponent is asserted go to meta.
Table scaling_table(const ScalingReport& scaling);

Table voronoi_record(std::int64_t c, std::int64_t u, double X, double Z,
                     const VoronoiResult& result);

}  // namespace tracelab::report
