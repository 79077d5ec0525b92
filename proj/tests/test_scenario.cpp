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

#include "nonlincp/scenario.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace nonlincp::scenario {
namespace {

using io::Json;

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("nonlincp-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

TEST(Parse, MinimalScenarioGetsDefaults) {
  const Scenario s = parse_scenario(Json{{"kind", "mixtures"}});
  EXPECT_EQ(s.kind, Kind::Mixtures);
  EXPECT_EQ(s.name, "mixtures");
  EXPECT_EQ(s.seed, 1u);
  EXPECT_FALSE(s.tolerance.has_value());
}

TEST(Parse, RoundTripThroughJson) {
  const Scenario s = parse_scenario(Json{{"name", "x"}, {"kind", "sweep"}, {"seed", 18446744073709551615ull},
                                         {"tolerance", 1e-3}, {"params", {{"random_cases", 2}}}});
  const Scenario back = parse_scenario(to_json(s));
  EXPECT_EQ(back.seed, 18446744073709551615ull);
  EXPECT_EQ(back.tolerance, 1e-3);
  EXPECT_EQ(back.params, s.params);
  EXPECT_EQ(to_string(back.kind), "sweep");
}

TEST(Parse, RejectsInvalidScenarios) {
  EXPECT_THROW(parse_scenario(Json::array()), ScenarioError);
  EXPECT_THROW(parse_scenario(Json{{"name", "x"}}), ScenarioError);
  EXPECT_THROW(parse_scenario(Json{{"kind", "teleport"}}), ScenarioError);
  EXPECT_THROW(parse_scenario(Json{{"kind", "sweep"}, {"seed", "one"}}), ScenarioError);
  EXPECT_THROW(parse_scenario(Json{{"kind", "sweep"}, {"tolerance", -1.0}}), ScenarioError);
  EXPECT_THROW(parse_scenario(Json{{"kind", "sweep"}, {"params", 3}}), ScenarioError);
  EXPECT_THROW(parse_scenario(Json{{"kind", "sweep"}, {"name", "../escape"}}), ScenarioError);
}

TEST(Load, MalformedJsonAndMissingFile) {
  const auto dir = temp_dir("load");
  std::ofstream(dir / "bad.json") << "{\"kind\": ";
  EXPECT_THROW(load_scenario(dir / "bad.json"), ScenarioError);
  EXPECT_THROW(load_scenario(dir / "missing.json"), ScenarioError);
  std::ofstream(dir / "good.json") << R"({"kind": "homogeneity"})";
  EXPECT_EQ(load_scenario(dir / "good.json").kind, Kind::Homogeneity);
}

TEST(Run, EveryKindPassesWithDefaults) {
  for (const char* kind : {"gisin_telegraph", "cp_baseline", "weinberg_telegraph", "mixtures", "homogeneity"}) {
    const Report r = run(parse_scenario(Json{{"kind", kind}}));
    EXPECT_TRUE(r.summary.pass) << kind << ": " << r.to_json().dump(2);
    EXPECT_FALSE(r.summary.checks.empty());
    EXPECT_GE(r.summary.wall_time_s, 0.0);
  }
  for (const char* kind : {"consistency", "sweep"}) {
    const Report r = run(parse_scenario(Json{{"kind", kind}, {"params", {{"random_cases", 5}}}}));
    EXPECT_TRUE(r.summary.pass) << kind;
  }
}

TEST(Run, VerdictFollowsDeclaredTolerance) {
  const Report strict = run(parse_scenario(Json{{"kind", "gisin_telegraph"}, {"tolerance", 0.0}}));
  const Report loose = run(parse_scenario(Json{{"kind", "gisin_telegraph"}, {"tolerance", 1e-9}}));
  EXPECT_TRUE(loose.summary.pass);
  // Rounding leaves a nonzero residual, so an exact tolerance fails.
  EXPECT_FALSE(strict.summary.pass);
  EXPECT_EQ(strict.summary.max_deviation, loose.summary.max_deviation);
}

TEST(Run, GisinNaiveRuleAgainstZeroReferenceFails) {
  const Report r = run(parse_scenario(
      Json{{"kind", "gisin_telegraph"}, {"params", {{"rule", "naive"}, {"reference", "zero"}}}}));
  EXPECT_FALSE(r.summary.pass);
  EXPECT_NEAR(r.summary.max_deviation, 0.25, 1e-3);
}

TEST(Run, CsvLayoutAndDeterminism) {
  const Scenario s = parse_scenario(Json{{"kind", "sweep"}, {"seed", 5}, {"params", {{"random_cases", 4}}}});
  const Report a = run(s), b = run(s);
  EXPECT_EQ(a.csv, b.csv);
  const Scenario other = parse_scenario(Json{{"kind", "sweep"}, {"seed", 6}, {"params", {{"random_cases", 4}}}});
  EXPECT_NE(run(other).csv, a.csv);

  const Report g = run(parse_scenario(Json{{"kind", "gisin_telegraph"}, {"params", {{"t_grid", {{"points", 3}}}}}}));
  std::istringstream lines(g.csv);
  std::string header, row;
  std::getline(lines, header);
  EXPECT_EQ(header.rfind("t,delta_norm,delta_0_0_re,delta_0_0_im", 0), 0u);
  int rows = 0;
  while (std::getline(lines, row)) ++rows;
  EXPECT_EQ(rows, 3);
}

TEST(Run, InvalidParametersAreScenarioErrors) {
  EXPECT_THROW(run(parse_scenario(Json{{"kind", "gisin_telegraph"}, {"params", {{"rule", "other"}}}})), ScenarioError);
  EXPECT_THROW(run(parse_scenario(Json{{"kind", "mixtures"}, {"params", {{"psi0", 1.0}, {"psi1", 1.0}}}})), ScenarioError);
  EXPECT_THROW(run(parse_scenario(Json{{"kind", "mixtures"}, {"params", {{"observable", "cubic"}}}})), ScenarioError);
  EXPECT_THROW(run(parse_scenario(Json{{"kind", "weinberg_telegraph"}, {"params", {{"beta", 1.0}}}})), ScenarioError);
  EXPECT_THROW(run(parse_scenario(Json{{"kind", "weinberg_telegraph"}, {"params", {{"step", -1.0}}}})), ScenarioError);
  EXPECT_THROW(run(parse_scenario(Json{{"kind", "consistency"}, {"params", {{"max_dim", 9}}}})), ScenarioError);
  EXPECT_THROW(run(parse_scenario(Json{{"kind", "gisin_telegraph"}, {"params", {{"a", {{"dim", 2}}}}}})), ScenarioError);
  EXPECT_THROW(run(parse_scenario(Json{{"kind", "cp_baseline"}, {"params", {{"n", "two"}}}})), ScenarioError);
}

TEST(Report, WritesSeriesAndSummary) {
  const auto dir = temp_dir("report");
  const Report r = run(parse_scenario(Json{{"kind", "weinberg_telegraph"}, {"params", {{"points", 11}}}}));
  write_report(r, dir / "w");
  const Json summary = Json::parse(read_file(dir / "w" / "summary.json"));
  EXPECT_EQ(summary.at("scenario").at("kind"), "weinberg_telegraph");
  EXPECT_EQ(summary.at("summary").at("pass"), true);
  EXPECT_TRUE(summary.at("summary").contains("wall_time_s"));
  EXPECT_EQ(read_file(dir / "w" / "series.csv"), r.csv);
  EXPECT_EQ(r.csv.rfind("t,sigma_y_simulated,sigma_y_closed_form,rho2_0_0_re", 0), 0u);
}

TEST(Report, CpBaselineDetails) {
  const Report r = run(parse_scenario(Json{{"kind", "cp_baseline"}}));
  const Json& verdicts = r.details.at("verdicts");
  EXPECT_EQ(verdicts.size(), 23u);
  EXPECT_EQ(verdicts[0].at("map"), "transpose");
  EXPECT_EQ(verdicts[0].at("cp"), false);
  EXPECT_NEAR(verdicts[0].at("witness").at("eigenvalue").get<double>(), -1.0, 1e-10);
  EXPECT_TRUE(verdicts[1].at("witness").is_null());
}

TEST(Report, MixturesDetails) {
  const Report lin = run(parse_scenario(Json{{"kind", "mixtures"}, {"params", {{"observable", "linear"}}}}));
  EXPECT_TRUE(lin.details.at("projector_average").is_number());
  const Report q = run(parse_scenario(Json{{"kind", "mixtures"}}));
  EXPECT_TRUE(q.details.at("projector_average").is_null());
  EXPECT_GT(q.details.at("witness").get<double>(), 1.0);
}

TEST(OutputRoot, EnvironmentOverride) {
  ::setenv("NONLINCP_OUT", "/tmp/elsewhere", 1);
  EXPECT_EQ(output_root(), std::filesystem::path("/tmp/elsewhere"));
  ::unsetenv("NONLINCP_OUT");
  EXPECT_EQ(output_root(), std::filesystem::path("nonlincp-out"));
}

}  // namespace
}  // namespace nonlincp::scenario
