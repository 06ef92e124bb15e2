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

#include "tracelab/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace tracelab::report {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string csv_cell(const Cell& c) {
  return std::visit(overloaded{
                        [](std::int64_t v) { return std::to_string(v); },
                        [](double v) { return format_double(v); },
                        [](bool v) { return std::string(v ? "1" : "0"); },
                        [](const std::string& v) {
                          if (v.find_first_of(",\"\n") == std::string::npos) return v;
                          std::string q = "\"";
                          for (const char ch : v) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
                          return q + "\"";
                        },
                    },
                    c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
  return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, c);
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write(std::ostream& out, const Table& table, Format format) {
  if (format == Format::csv) {
    write_csv(out, table);
  } else {
    write_json(out, table);
  }
}

void write_csv(std::ostream& out, const Table& table) {
  for (const auto& [key, value] : table.meta) out << "# " << key << ": " << csv_cell(value) << "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << "\n";
  }
}

void write_json(std::ostream& out, const Table& table) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.meta) doc[key] = json_cell(value);
  auto object_of = [&](const std::vector<Cell>& row) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = json_cell(row[i]);
    return obj;
  };
  if (table.record && table.rows.size() == 1) {
    doc.update(object_of(table.rows.front()));
  } else {
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) doc["rows"].push_back(object_of(row));
  }
  out << doc.dump(2) << "\n";
}

Table kl_table(const KloostermanTable& kl) {
  Table t;
  t.columns = {"n", "re", "im", "abs"};
  for (std::size_t n = 0; n < kl.values.size(); ++n) {
    const auto v = kl.values[n];
    t.rows.push_back({static_cast<std::int64_t>(n), v.real(), v.imag(), std::abs(v)});
  }
  return t;
}

Table scan_table(const ScanReport& scan) {
  Table t;
  t.columns = {"p",      "kind",  "delta", "alpha", "beta", "gamma",       "alphap",
               "betap",  "gammap", "re",   "im",    "abs",  "ratio_sqrtq", "diagonal_flag"};
  for (const auto& r : scan.rows) {
    t.rows.push_back({scan.p, std::string(r.diagonal_kind ? "diagonal" : "offdiagonal"), r.delta,
                      r.alpha, r.beta, r.gamma, r.alphap, r.betap, r.gammap, r.value.real(),
                      r.value.imag(), r.abs, r.ratio_sqrtq, r.diagonal_flag});
  }
  return t;
}

std::string scan_summary(const ScanReport& scan) {
  std::ostringstream s;
  s << "summary p=" << scan.p << " rows=" << scan.rows.size()
    << " max_offdiag_ratio=" << format_double(scan.max_offdiag_ratio)
    << " max_diag_deviation_over_sqrtp="
    << format_double(scan.max_diag_deviation / std::sqrt(static_cast<double>(scan.p)));
  if (scan.fitted_c) {
    s << " fitted_c=" << format_double(scan.fitted_c->real()) << ","
      << format_double(scan.fitted_c->imag());
  }
  s << " torus_size=" << scan.torus.size() << " result=" << (scan.passed ? "PASS" : "FAIL");
  if (!scan.offending.empty()) {
    s << " offending_rows=";
    for (std::size_t i = 0; i < scan.offending.size(); ++i) s << (i ? ";" : "") << scan.offending[i];
  }
  return s.str();
}

Table twisted_record(std::int64_t p, const std::string& spec, double X, double Z,
                     std::int64_t r_max, const TwistedSum& sum) {
  Table t;
  t.record = true;
  t.columns = {"p", "K", "X", "Z", "r_max", "re", "im", "abs", "envelope", "terms"};
  t.rows.push_back({p, spec, X, Z, r_max, sum.value.real(), sum.value.imag(),
                    std::abs(sum.value), sum.envelope, static_cast<std::int64_t>(sum.terms)});
  return t;
}

Table scaling_table(const ScalingReport& scaling) {
  Table t;
  t.meta.emplace_back("K", scaling.spec);
  t.meta.emplace_back("Z", scaling.Z);
  t.meta.emplace_back("note",
                      std::string("exploratory; the asymptotic exponent 3 - 1/16 is not "
                                  "expected at these sizes and is not tested"));
  t.meta.emplace_back("slope", scaling.slope ? Cell(*scaling.slope) : Cell(std::string("nan")));
  t.columns = {"p", "X", "abs_s", "ratio", "log_ratio", "envelope", "in_theorem_range"};
  for (const auto& r : scaling.rows) {
    t.rows.push_back({r.p, r.X, r.abs_s, r.ratio, r.log_ratio, r.envelope, r.in_theorem_range});
  }
  return t;
}

Table voronoi_record(std::int64_t c, std::int64_t u, double X, double Z,
                     const VoronoiResult& result) {
  Table t;
  t.record = true;
  t.columns = {"c",      "u",      "X",       "Z",     "lhs_re",          "lhs_im",
               "rhs_re", "rhs_im", "absdiff", "m_max", "doubling_change", "scale"};
  t.rows.push_back({c, u, X, Z, result.lhs.real(), result.lhs.imag(), result.rhs.real(),
                    result.rhs.imag(), result.absdiff, result.m_max, result.doubling_change,
                    result.scale});
  return t;
}

}  // namespace tracelab::report
