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

#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "vknot/gauss.hpp"
#include "vknot/laurent.hpp"

namespace vknot {

struct ExternalFlags {
  std::optional<bool> graded_genus_zero;
  std::optional<long long> rasmussen;
};

struct CensusRecord {
  std::string name;
  GaussCode code;
  ExternalFlags external_flags;
  std::size_t line = 0;
};

struct CensusLoad {
  std::vector<CensusRecord> records;
  /// Messages for skipped lines (skip_bad mode only).
  std::vector<std::string> errors;
};

/**
 * Census format: one `name <whitespace> gausscode` per line; blank lines and
 * lines starting with '#' are ignored. A bad line throws ParseError unless
 * `skip_bad`, in which case it is reported in `errors`. Names must be unique.
 */
CensusLoad load_census(std::istream& in, bool skip_bad = false);
/// Throws IoError if the file cannot be read.
CensusLoad load_census(const std::string& path, bool skip_bad = false);

struct SieveRow {
  std::string name;
  std::size_t crossings = 0;
  std::string delta0_canonical;
  bool delta0_zero = false;
  std::string writhe_poly;
  bool obstructed = false;
  std::optional<std::string> error;
  ExternalFlags flags;
  /// Set once external flags have been merged for this row.
  std::optional<bool> survives;
};

struct SieveSummary {
  std::size_t total = 0;
  std::size_t delta0_zero_count = 0;
  std::size_t obstructed_count = 0;
  std::size_t error_count = 0;
  std::optional<std::size_t> survivor_count;
};

struct SieveReport {
  std::vector<SieveRow> rows;
  SieveSummary summary;
  std::vector<std::string> warnings;
};

struct SieveOptions {
  bool parallel = true;
  UnitClass unit_class = UnitClass::UpToMonomialSign;
};

/// Rows come back in input order. A record that fails to evaluate becomes an
/// error row and does not count as obstructed or zero.
SieveReport run_sieve(const std::vector<CensusRecord>& records, const SieveOptions& options = {});

/**
 * Flags file: `name key=value ...` per line, keys graded_genus_zero
 * (true/false/1/0) and rasmussen (integer). A row survives the combined sieve
 * iff graded_genus_zero and delta0_zero. Unknown names produce a warning.
 * Throws ParseError on malformed lines.
 */
SieveReport merge_external_flags(SieveReport report, std::istream& flags);
SieveReport merge_external_flags(SieveReport report, const std::string& path);

std::string report_json(const SieveReport& report);
std::string report_csv(const SieveReport& report);

}  // namespace vknot
