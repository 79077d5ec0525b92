// Copyright 2026 The nonlincp Authors
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

// Scenario files and the runner behind the nonlincp command-line tool.
//
// A scenario is a JSON object
//
//   {"name": "...", "kind": "<kind>", "seed": 1, "tolerance": 1e-9,
//    "params": {...}}
//
// where kind is one of gisin_telegraph, consistency, cp_baseline,
// weinberg_telegraph, mixtures, homogeneity, sweep. Every kind has built-in
// defaults, so "params" may be omitted. Running a scenario produces a Report
// whose pass/fail verdict is derived only from the declared tolerances.

#pragma once

#include "nonlincp/io.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nonlincp::scenario {

enum class Kind {
  GisinTelegraph,
  Consistency,
  CpBaseline,
  WeinbergTelegraph,
  Mixtures,
  Homogeneity,
  Sweep,
};

std::string to_string(Kind kind);

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Scenario {
  std::string name;
  Kind kind = Kind::GisinTelegraph;
  std::uint64_t seed = 1;
  /// Overrides the kind's primary tolerance when set.
  std::optional<double> tolerance;
  io::Json params = io::Json::object();
};

/// Throws ScenarioError on unknown kinds or malformed fields.
Scenario parse_scenario(const io::Json& j);
Scenario load_scenario(const std::filesystem::path& path);
io::Json to_json(const Scenario& s);

struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  /// true: pass iff value <= threshold; false: pass iff value >= threshold.
  bool upper_bound = true;
  bool pass = false;
};

struct Summary {
  double max_deviation = 0.0;  // largest value among upper-bound checks
  bool pass = false;
  double wall_time_s = 0.0;
  std::vector<Check> checks;
};

struct Report {
  Scenario scenario;
  /// Per-time-step records as CSV text; empty for kinds without a time axis.
  std::string csv;
  /// Kind-specific structured results.
  io::Json details = io::Json::object();
  Summary summary;

  io::Json to_json() const;
};

/// Throws ScenarioError for invalid parameters.
Report run(const Scenario& s);

/// Writes <dir>/series.csv (when present) and <dir>/summary.json.
void write_report(const Report& report, const std::filesystem::path& dir);

/// $NONLINCP_OUT if set, otherwise ./nonlincp-out.
std::filesystem::path output_root();

}  // namespace nonlincp::scenario
