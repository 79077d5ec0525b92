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

// nonlincp command-line tool: runs scenario files and the named experiments.
//
// Exit codes: 0 all tolerances pass, 1 a tolerance failed, 2 usage or parse
// error. Reports go to $NONLINCP_OUT/<scenario name>/ (default ./nonlincp-out).

#include "nonlincp/scenario.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <future>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

namespace {

using nonlincp::scenario::Report;
using nonlincp::scenario::Scenario;
using nonlincp::scenario::ScenarioError;
using nonlincp::io::Json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Accepts "x" or "re,im".
Json complex_arg(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return std::stod(text);
    return Json::array({std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))});
  } catch (const std::exception&) {
    throw ScenarioError("cannot parse complex number '" + text + "'");
  }
}

void print_summary(const Report& r, std::ostream& os) {
  os << r.scenario.name << ": " << (r.summary.pass ? "PASS" : "FAIL")
     << " (" << r.summary.wall_time_s << " s)\n";
  for (const auto& c : r.summary.checks) {
    os << "  " << (c.pass ? "ok  " : "FAIL") << ' ' << c.name << " = " << c.value
       << (c.upper_bound ? " <= " : " >= ") << c.threshold << '\n';
  }
}

int finish(const Report& r, bool quiet) {
  const auto dir = nonlincp::scenario::output_root() / r.scenario.name;
  nonlincp::scenario::write_report(r, dir);
  print_summary(r, quiet ? std::cerr : std::cout);
  return r.summary.pass ? kExitPass : kExitFail;
}

Scenario builtin(const std::string& name, nonlincp::scenario::Kind kind, Json params) {
  Scenario s;
  s.name = name;
  s.kind = kind;
  s.params = std::move(params);
  return s;
}

int run_all(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw ScenarioError("no scenario files in " + dir);

  std::vector<Scenario> scenarios;
  for (const auto& f : files) scenarios.push_back(nonlincp::scenario::load_scenario(f));

  std::vector<std::future<Report>> jobs;
  for (const auto& s : scenarios) {
    jobs.push_back(std::async(std::launch::async, [s] { return nonlincp::scenario::run(s); }));
  }
  int status = kExitPass;
  for (auto& job : jobs) {
    const Report r = job.get();
    if (finish(r, false) != kExitPass) status = kExitFail;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonlinear density-matrix dynamics: scenario runner"};
  app.require_subcommand(1);

  std::string file;
  auto* run = app.add_subcommand("run", "Run one scenario file");
  run->add_option("file", file, "Scenario JSON")->required();

  std::string dir;
  auto* run_all_cmd = app.add_subcommand("run-all", "Run every *.json scenario in a directory");
  run_all_cmd->add_option("dir", dir, "Scenario directory")->required();

  int cp_n = 2;
  std::uint64_t cp_seed = 1;
  auto* cp = app.add_subcommand("cp-baseline", "Choi-matrix CP verdicts for reference maps (JSON)");
  cp->add_option("--n", cp_n, "Dimension of the transpose map")->check(CLI::Range(1, 8));
  cp->add_option("--seed", cp_seed, "Seed for random unitaries");

  std::string rule = "naive";
  int gisin_points = 501;
  auto* gisin = app.add_subcommand("telegraph-gisin", "Signaling gap of the four-block example (CSV)");
  gisin->add_option("--rule", rule, "Extension rule")->check(CLI::IsMember({"naive", "correct"}));
  gisin->add_option("--points", gisin_points, "Samples on [0, 3 pi]")->check(CLI::PositiveNumber);

  double e1 = 1.0, e2 = 0.5, eps = 0.1, t_max = 5.0, step = 1e-3;
  std::string alpha = "0.9238795325112867", beta = "0.3826834323650898";
  auto* weinberg = app.add_subcommand("telegraph-weinberg", "Singlet signal under the Weinberg model (CSV)");
  weinberg->add_option("--e1", e1);
  weinberg->add_option("--e2", e2);
  weinberg->add_option("--eps", eps);
  weinberg->add_option("--alpha", alpha, "re or re,im");
  weinberg->add_option("--beta", beta, "re or re,im");
  weinberg->add_option("--t-max", t_max)->check(CLI::PositiveNumber);
  weinberg->add_option("--step", step)->check(CLI::PositiveNumber);

  std::string psi0 = "0.7071067811865476", psi1 = "0.7071067811865476", observable = "quintic";
  auto* mix = app.add_subcommand("mixtures", "Random-phase averages of an observable (JSON)");
  mix->add_option("--psi0", psi0, "re or re,im");
  mix->add_option("--psi1", psi1, "re or re,im");
  mix->add_option("--observable", observable)->check(CLI::IsMember({"linear", "quintic"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  using nonlincp::scenario::Kind;
  try {
    if (*run) return finish(nonlincp::scenario::run(nonlincp::scenario::load_scenario(file)), false);
    if (*run_all_cmd) return run_all(dir);
    if (*cp) {
      Scenario s = builtin("cp_baseline", Kind::CpBaseline, {{"n", cp_n}});
      s.seed = cp_seed;
      const Report r = nonlincp::scenario::run(s);
      std::cout << r.details.at("verdicts").dump(2) << '\n';
      return finish(r, true);
    }
    if (*gisin) {
      const Report r = nonlincp::scenario::run(builtin(
          "telegraph_gisin", Kind::GisinTelegraph,
          {{"rule", rule}, {"t_grid", {{"start", 0.0}, {"stop", 3.0 * std::numbers::pi}, {"points", gisin_points}}}}));
      std::cout << r.csv;
      return finish(r, true);
    }
    if (*weinberg) {
      const Report r = nonlincp::scenario::run(builtin(
          "telegraph_weinberg", Kind::WeinbergTelegraph,
          {{"e1", e1}, {"e2", e2}, {"eps", eps}, {"alpha", complex_arg(alpha)},
           {"beta", complex_arg(beta)}, {"t_max", t_max}, {"step", step}}));
      std::cout << r.csv;
      return finish(r, true);
    }
    if (*mix) {
      const Report r = nonlincp::scenario::run(builtin(
          "mixtures", Kind::Mixtures,
          {{"psi0", complex_arg(psi0)}, {"psi1", complex_arg(psi1)}, {"observable", observable}}));
      std::cout << r.details.dump(2) << '\n';
      return finish(r, true);
    }
  } catch (const ScenarioError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
