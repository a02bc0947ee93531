// Copyright 2026 The vknot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vknot/sieve.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "vknot/error.hpp"
#include "vknot/parallel.hpp"
#include "vknot/sawollek.hpp"

namespace vknot {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Splits "name rest" at the first run of whitespace.
std::pair<std::string, std::string> split_name(const std::string& line) {
  const auto ws = line.find_first_of(" \t");
  if (ws == std::string::npos) return {line, {}};
  return {line.substr(0, ws), trim(line.substr(ws))};
}

}  // namespace

CensusLoad load_census(std::istream& in, bool skip_bad) {
  CensusLoad out;
  std::set<std::string> names;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    try {
      auto [name, code_text] = split_name(line);
      if (!names.insert(name).second) throw ValidationError("duplicate knot name '" + name + "'");
      CensusRecord rec;
      rec.name = std::move(name);
      rec.code = parse_gauss_code(code_text);
      rec.line = line_no;
      out.records.push_back(std::move(rec));
    } catch (const InputError& e) {
      ParseError err(line_no, e.what());
      if (!skip_bad) throw err;
      out.errors.emplace_back(err.what());
    }
  }
  return out;
}

CensusLoad load_census(const std::string& path, bool skip_bad) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open census file '" + path + "'");
  return load_census(in, skip_bad);
}

namespace {

SieveRow evaluate(const CensusRecord& rec, UnitClass unit_class) {
  SieveRow row;
  row.name = rec.name;
  row.crossings = rec.code.crossing_count();
  row.flags = rec.external_flags;
  try {
    const GaussDiagram d = to_diagram(rec.code);
    const GeneralizedAlexander g = delta0(d, kDefaultArcOrder, unit_class);
    row.delta0_canonical = to_string(g.canonical.poly);
    row.delta0_zero = g.is_zero;
    row.obstructed = !g.is_zero;
    if (d.component_count() == 1) {
      const LaurentPoly q = divisibility_check(g, d);
      row.writhe_poly = to_string(-substitute(q, LaurentPoly::t(-1), LaurentPoly::t()));
    }
  } catch (const Error& e) {
    row = SieveRow{};
    row.name = rec.name;
    row.crossings = rec.code.crossing_count();
    row.error = e.what();
  }
  return row;
}

void recount(SieveReport& r) {
  SieveSummary s;
  s.total = r.rows.size();
  std::size_t survivors = 0;
  bool any_flags = false;
  for (const auto& row : r.rows) {
    if (row.error) {
      ++s.error_count;
      continue;
    }
    if (row.delta0_zero) ++s.delta0_zero_count;
    if (row.obstructed) ++s.obstructed_count;
    if (row.survives) {
      any_flags = true;
      if (*row.survives) ++survivors;
    }
  }
  if (any_flags || r.summary.survivor_count) s.survivor_count = survivors;
  r.summary = s;
}

bool parse_bool(const std::string& v, std::size_t line) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ParseError(line, "expected a boolean, found '" + v + "'");
}

}  // namespace

SieveReport run_sieve(const std::vector<CensusRecord>& records, const SieveOptions& options) {
  SieveReport report;
  report.rows = parallel_map(
      records.size(), [&](std::size_t i) { return evaluate(records[i], options.unit_class); },
      options.parallel ? default_thread_count() : 1);
  recount(report);
  return report;
}

SieveReport merge_external_flags(SieveReport report, std::istream& flags) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < report.rows.size(); ++i) index.emplace(report.rows[i].name, i);

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(flags, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto [name, rest] = split_name(line);
    ExternalFlags parsed;
    std::istringstream fields(rest);
    std::string field;
    while (fields >> field) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) throw ParseError(line_no, "expected key=value, found '" + field + "'");
      const std::string key = field.substr(0, eq), value = field.substr(eq + 1);
      if (key == "graded_genus_zero") {
        parsed.graded_genus_zero = parse_bool(value, line_no);
      } else if (key == "rasmussen") {
        try {
          std::size_t used = 0;
          parsed.rasmussen = std::stoll(value, &used);
          if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::logic_error&) {
          throw ParseError(line_no, "expected an integer, found '" + value + "'");
        }
      } else {
        throw ParseError(line_no, "unknown flag '" + key + "'");
      }
    }
    const auto it = index.find(name);
    if (it == index.end()) {
      report.warnings.push_back("line " + std::to_string(line_no) + ": unknown knot name '" + name + "'");
      continue;
    }
    SieveRow& row = report.rows[it->second];
    if (parsed.graded_genus_zero) row.flags.graded_genus_zero = parsed.graded_genus_zero;
    if (parsed.rasmussen) row.flags.rasmussen = parsed.rasmussen;
    if (row.flags.graded_genus_zero && !row.error)
      row.survives = *row.flags.graded_genus_zero && row.delta0_zero;
  }
  recount(report);
  return report;
}

SieveReport merge_external_flags(SieveReport report, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open flags file '" + path + "'");
  return merge_external_flags(std::move(report), in);
}

std::string report_json(const SieveReport& report) {
  using nlohmann::ordered_json;
  ordered_json records = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json r;
    r["name"] = row.name;
    r["crossings"] = row.crossings;
    if (row.error) {
      r["error"] = *row.error;
    } else {
      r["delta0_canonical"] = row.delta0_canonical;
      r["delta0_zero"] = row.delta0_zero;
      r["writhe_poly"] = row.writhe_poly.empty() ? ordered_json(nullptr) : ordered_json(row.writhe_poly);
      r["obstructed"] = row.obstructed;
    }
    if (row.flags.graded_genus_zero) r["graded_genus_zero"] = *row.flags.graded_genus_zero;
    if (row.flags.rasmussen) r["rasmussen"] = *row.flags.rasmussen;
    if (row.survives) r["survives"] = *row.survives;
    records.push_back(std::move(r));
  }
  ordered_json summary;
  summary["total"] = report.summary.total;
  summary["delta0_zero_count"] = report.summary.delta0_zero_count;
  summary["obstructed_count"] = report.summary.obstructed_count;
  summary["error_count"] = report.summary.error_count;
  if (report.summary.survivor_count) summary["survivor_count"] = *report.summary.survivor_count;

  ordered_json doc;
  doc["records"] = std::move(records);
  doc["summary"] = std::move(summary);
  if (!report.warnings.empty()) doc["warnings"] = report.warnings;
  return doc.dump(2) + "\n";
}

std::string report_csv(const SieveReport& report) {
  const bool with_survival = report.summary.survivor_count.has_value();
  std::ostringstream os;
  os << "name,crossings,delta0,delta0_zero,writhe,obstructed" << (with_survival ? ",survives" : "") << '\n';
  for (const auto& row : report.rows) {
    os << row.name << ',' << row.crossings << ',';
    if (row.error)
      os << "error,,,";
    else
      os << row.delta0_canonical << ',' << (row.delta0_zero ? "true" : "false") << ',' << row.writhe_poly
         << ',' << (row.obstructed ? "true" : "false");
    if (with_survival) os << ',' << (row.survives ? (*row.survives ? "true" : "false") : "");
    os << '\n';
  }
  return os.str();
}

}  // namespace vknot
