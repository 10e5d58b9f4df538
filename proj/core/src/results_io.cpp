// SPDX-License-Identifier: Apache-2.0
//
// dmaswipt: DMA-aided multiuser MISO power-splitting SWIPT optimization
// Copyright (C) 2026 The dmaswipt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "dmaswipt/results_io.hpp"

#include <charconv>
#include <cmath>
#include <nlohmann/json.hpp>

#include "dmaswipt/errors.hpp"
#include "dmaswipt/units.hpp"

namespace dmaswipt {

using json = nlohmann::ordered_json;

namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? ";" : "") + format_double(v[i]);
  return s;
}

std::vector<std::string> split_record(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  return out;
}

double parse_double(const std::string& s) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ConfigError("bad number '" + s + "' in result table");
  return v;
}

template <class T>
T parse_integer(const std::string& s) {
  T v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ConfigError("bad integer '" + s + "' in result table");
  return v;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(';', start);
    out.push_back(parse_double(s.substr(start, pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json numbers(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

json row_json(const ResultRow& r) {
  json o = json::object();
  o["scenario_id"] = r.scenario_id;
  o["seed"] = r.seed;
  o["scheme"] = r.scheme;
  o["ps_mode"] = r.ps_mode;
  o["K"] = r.users;
  o["sweep_value"] = number(r.sweep_value);
  o["ptx_dbm"] = number(r.ptx_dbm);
  o["feasible"] = r.feasible;
  o["sinr_margins"] = numbers(r.sinr_margins);
  o["eh_margins"] = numbers(r.eh_margins);
  o["iterations"] = r.iterations;
  o["wall_clock_s"] = r.wall_clock_s >= 0.0 ? json(r.wall_clock_s) : json(nullptr);
  return o;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << quote(r.scenario_id) << ',' << r.seed << ',' << quote(r.scheme) << ','
        << quote(r.ps_mode) << ',' << r.users << ',' << format_double(r.sweep_value)
        << ',' << format_double(r.ptx_dbm) << ',' << (r.feasible ? 1 : 0) << ','
        << join(r.sinr_margins) << ',' << join(r.eh_margins) << ','
        << r.iterations << ',';
    if (r.wall_clock_s >= 0.0) out << format_double(r.wall_clock_s);
    out << '\n';
  }
}

std::vector<ResultRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw ConfigError("result table header does not match the schema");
  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_record(line);
    if (f.size() != 12)
      throw ConfigError("result row with " + std::to_string(f.size()) +
                        " fields, expected 12");
    ResultRow r;
    r.scenario_id = f[0];
    r.seed = parse_integer<std::uint64_t>(f[1]);
    r.scheme = f[2];
    r.ps_mode = f[3];
    r.users = parse_integer<int>(f[4]);
    r.sweep_value = parse_double(f[5]);
    r.ptx_dbm = parse_double(f[6]);
    if (f[7] != "0" && f[7] != "1") throw ConfigError("feasible must be 0 or 1");
    r.feasible = f[7] == "1";
    r.sinr_margins = parse_list(f[8]);
    r.eh_margins = parse_list(f[9]);
    r.iterations = parse_integer<int>(f[10]);
    r.wall_clock_s = f[11].empty() ? -1.0 : parse_double(f[11]);
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_json(std::ostream& out, const std::vector<ResultRow>& rows) {
  json a = json::array();
  for (const auto& r : rows) a.push_back(row_json(r));
  out << a.dump(2) << '\n';
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "sweep_value,scheme,mean_ptx_dbm,realizations,excluded\n";
  for (const auto& s : rows)
    out << format_double(s.sweep_value) << ',' << quote(s.scheme) << ','
        << format_double(s.mean_ptx_dbm) << ',' << s.realizations << ','
        << s.excluded << '\n';
}

void write_run_json(std::ostream& out, const SingleRun& run) {
  json o = row_json(run.row);
  const RunRecord& rec = run.record;
  auto dbm = [](const std::vector<double>& w) {
    json a = json::array();
    for (double x : w) a.push_back(number(watts_to_dbm(x)));
    return a;
  };
  o["power_trace_dbm"] = dbm(rec.power_trace);
  o["accepted_trace_dbm"] = dbm(rec.accepted_trace);
  o["best_trace_dbm"] = dbm(rec.best_trace);
  o["ps_ratios"] = numbers(rec.rho);
  o["precoder_rank_ratio"] = numbers(rec.precoder_rank_ratio);
  o["dma_rank_ratio"] = numbers(rec.dma_rank_ratio);
  o["initializations"] = rec.initializations;
  json q = json::array();
  for (Eigen::Index n = 0; n < rec.weights.values().size(); ++n) {
    const cdouble v = rec.weights.values()(n);
    q.push_back({v.real(), v.imag()});
  }
  o["dma_weights"] = q;
  out << o.dump(2) << '\n';
}

}  // namespace dmaswipt
