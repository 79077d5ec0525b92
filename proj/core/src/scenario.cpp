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

#include "nonlincp/compose.hpp"
#include "nonlincp/cpcheck.hpp"
#include "nonlincp/hartree.hpp"
#include "nonlincp/mixtures.hpp"
#include "nonlincp/poisson.hpp"
#include "nonlincp/random.hpp"
#include "nonlincp/weinberg.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

namespace nonlincp::scenario {

namespace {

using io::Json;

constexpr std::pair<Kind, const char*> kKindNames[] = {
    {Kind::GisinTelegraph, "gisin_telegraph"},
    {Kind::Consistency, "consistency"},
    {Kind::CpBaseline, "cp_baseline"},
    {Kind::WeinbergTelegraph, "weinberg_telegraph"},
    {Kind::Mixtures, "mixtures"},
    {Kind::Homogeneity, "homogeneity"},
    {Kind::Sweep, "sweep"},
};

Kind kind_from_string(const std::string& name) {
  for (const auto& [kind, label] : kKindNames) {
    if (name == label) return kind;
  }
  throw ScenarioError("unknown scenario kind '" + name + "'");
}

// Parameter access with defaults; wraps JSON type errors as ScenarioError.
template <class T>
T param(const Json& params, const char* key, T fallback) {
  if (!params.contains(key)) return fallback;
  try {
    return params.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ScenarioError(std::string("parameter '") + key + "': " + e.what());
  }
}

CMat matrix_param(const Json& params, const char* key, const CMat& fallback) {
  if (!params.contains(key)) return fallback;
  try {
    return io::cmat_from_json(params.at(key));
  } catch (const io::FormatError& e) {
    throw ScenarioError(std::string("parameter '") + key + "': " + e.what());
  }
}

Complex complex_param(const Json& params, const char* key, Complex fallback) {
  if (!params.contains(key)) return fallback;
  try {
    return io::complex_from_json(params.at(key));
  } catch (const io::FormatError& e) {
    throw ScenarioError(std::string("parameter '") + key + "': " + e.what());
  }
}

std::vector<double> grid_param(const Json& params, double start, double stop, int points) {
  if (params.contains("t_grid")) {
    const Json& g = params.at("t_grid");
    start = param(g, "start", start);
    stop = param(g, "stop", stop);
    points = param(g, "points", points);
  }
  if (points < 1 || !(stop >= start)) throw ScenarioError("invalid t_grid");
  return linspace(start, stop, points);
}

class CsvBuilder {
 public:
  explicit CsvBuilder(const std::vector<std::string>& header) {
    for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
    out_ << '\n';
  }
  void row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << io::format_double(values[i]);
    out_ << '\n';
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

std::vector<std::string> matrix_header(const std::string& label, int dim) {
  std::vector<std::string> out;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const std::string base = label + "_" + std::to_string(i) + "_" + std::to_string(j);
      out.push_back(base + "_re");
      out.push_back(base + "_im");
    }
  }
  return out;
}

void append_matrix(std::vector<double>& row, const CMat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(m(i, j).real());
      row.push_back(m(i, j).imag());
    }
  }
}

Check upper(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, true, value <= threshold};
}

Check lower(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, false, value >= threshold};
}

double tolerance_or(const Scenario& s, double fallback) { return s.tolerance.value_or(fallback); }

// -(1/4) sin^2(2t/3) [cos(4t/3) sigma_x + sin(4t/3) sigma_y]
CMat four_block_gap_reference(double t) {
  const double s = std::sin(2.0 * t / 3.0);
  return -0.25 * s * s *
         (std::cos(4.0 * t / 3.0) * qalg::pauli_x() + std::sin(4.0 * t / 3.0) * qalg::pauli_y());
}

Report run_gisin(const Scenario& s) {
  const Json& p = s.params;
  compose::FourBlockExample ex = compose::FourBlockExample::standard();
  ex.a = matrix_param(p, "a", ex.a);
  ex.b = matrix_param(p, "b", ex.b);
  ex.h = matrix_param(p, "h", ex.h);
  ex.validate();
  const CMat u = matrix_param(p, "unitary", compose::four_block_basis_change());
  const auto grid = grid_param(p, 0.0, 3.0 * std::numbers::pi, 501);
  const std::string rule_name = param<std::string>(p, "rule", "naive");
  if (rule_name != "naive" && rule_name != "correct") throw ScenarioError("rule must be 'naive' or 'correct'");
  const std::string reference =
      param<std::string>(p, "reference", rule_name == "naive" ? "closed_form" : "zero");
  if (reference != "closed_form" && reference != "zero" && reference != "none") {
    throw ScenarioError("reference must be 'closed_form', 'zero' or 'none'");
  }

  const auto rule = rule_name == "naive" ? compose::naive_rule(compose::hartree_family(ex.flow()))
                                         : compose::correct_rule(ex.flow());
  const auto gap = compose::signaling_gap(rule, ex.blocks(), u, grid);

  auto header = std::vector<std::string>{"t", "delta_norm"};
  const auto mh = matrix_header("delta", static_cast<int>(ex.a.rows()));
  header.insert(header.end(), mh.begin(), mh.end());
  CsvBuilder csv(header);
  double max_dev = 0.0, max_norm = 0.0;
  for (std::size_t i = 0; i < gap.size(); ++i) {
    const auto& sample = gap.values[i];
    std::vector<double> row{gap.t[i], sample.norm};
    append_matrix(row, sample.delta);
    csv.row(row);
    max_norm = std::max(max_norm, sample.norm);
    if (reference == "closed_form") {
      max_dev = std::max(max_dev, qalg::norm_max(sample.delta - four_block_gap_reference(gap.t[i])));
    } else if (reference == "zero") {
      max_dev = std::max(max_dev, qalg::norm_max(sample.delta));
    }
  }
  Report r;
  r.csv = csv.str();
  r.details = {{"rule", rule_name}, {"reference", reference}, {"max_delta_norm", max_norm}};
  if (reference != "none") {
    r.summary.checks.push_back(upper("max_entry_deviation_from_" + reference, max_dev, tolerance_or(s, 1e-9)));
  }
  return r;
}

double min_relative_eig(const CMat& rho) {
  return qalg::min_eig_herm(rho) / (1.0 + qalg::norm_op2(rho));
}

struct ConsistencyStats {
  double max_consistency = 0.0;
  double max_basis_gap = 0.0;
  double min_eig = std::numeric_limits<double>::infinity();
};

void accumulate_case(ConsistencyStats& stats, const hartree::MeanFieldFlow& flow,
                     const Bipartite& rho, const CMat& u, const std::vector<double>& grid) {
  const auto consistency = compose::consistency_check(flow, rho, grid);
  stats.max_consistency = std::max(stats.max_consistency,
                                   *std::max_element(consistency.values.begin(), consistency.values.end()));
  for (double t : grid) stats.min_eig = std::min(stats.min_eig, min_relative_eig(compose::correct_extend(flow, t, rho).mat()));
  if (u.size() > 0) {
    const auto gap = compose::signaling_gap(compose::correct_rule(flow), compose::BlockForm::from_bipartite(rho), u, grid);
    for (const auto& g : gap.values) stats.max_basis_gap = std::max(stats.max_basis_gap, g.norm);
  }
}

Report run_consistency(const Scenario& s) {
  const Json& p = s.params;
  const auto grid = grid_param(p, 0.0, 10.0, 101);
  const int count = param(p, "random_cases", 100);
  const int max_dim = param(p, "max_dim", 4);
  if (count < 0 || max_dim < 1 || max_dim > 8) throw ScenarioError("invalid random_cases/max_dim");

  const auto ex = compose::FourBlockExample::standard();
  const auto example_series = compose::consistency_check(ex.flow(), ex.state(), grid);
  CsvBuilder csv({"t", "four_block_deviation"});
  for (std::size_t i = 0; i < example_series.size(); ++i) csv.row({example_series.t[i], example_series.values[i]});

  ConsistencyStats stats;
  accumulate_case(stats, ex.flow(), ex.state(), CMat(), grid);
  CaseGenerator gen(s.seed);
  for (int c = 0; c < count; ++c) {
    const int n = gen.uniform_int(1, max_dim), m = gen.uniform_int(1, max_dim);
    const CMat h = gen.hermitian(n);
    const Bipartite rho = generate_random_cases(gen.uniform_int(0, 1 << 30), 1, n, m).front();
    accumulate_case(stats, {h, 2.0}, rho, CMat(), grid);
  }
  Report r;
  r.csv = csv.str();
  r.details = {{"random_cases", count}, {"max_dim", max_dim}, {"grid_points", grid.size()}};
  r.summary.checks.push_back(upper("max_consistency_deviation", stats.max_consistency, tolerance_or(s, 1e-10)));
  r.summary.checks.push_back(lower("min_relative_eigenvalue", stats.min_eig, -1e-10));
  return r;
}

Report run_sweep(const Scenario& s) {
  const Json& p = s.params;
  const auto grid = grid_param(p, 0.0, 10.0, 51);
  const int count = param(p, "random_cases", 100);
  const int max_dim = param(p, "max_dim", 4);
  if (count < 0 || max_dim < 1 || max_dim > 8) throw ScenarioError("invalid random_cases/max_dim");
  CaseGenerator gen(s.seed);
  ConsistencyStats stats;
  CsvBuilder csv({"case", "n", "m", "consistency", "basis_gap", "min_relative_eig"});
  for (int c = 0; c < count; ++c) {
    const int n = gen.uniform_int(1, max_dim), m = gen.uniform_int(1, max_dim);
    const CMat h = gen.hermitian(n);
    const CMat u = gen.unitary(m);
    const Bipartite rho = generate_random_cases(gen.uniform_int(0, 1 << 30), 1, n, m).front();
    ConsistencyStats local;
    accumulate_case(local, {h, 2.0}, rho, u, grid);
    csv.row({double(c), double(n), double(m), local.max_consistency, local.max_basis_gap, local.min_eig});
    stats.max_consistency = std::max(stats.max_consistency, local.max_consistency);
    stats.max_basis_gap = std::max(stats.max_basis_gap, local.max_basis_gap);
    stats.min_eig = std::min(stats.min_eig, local.min_eig);
  }
  Report r;
  r.csv = csv.str();
  r.details = {{"random_cases", count}, {"max_dim", max_dim}};
  r.summary.checks.push_back(upper("max_consistency_deviation", stats.max_consistency, 1e-10));
  r.summary.checks.push_back(upper("max_correct_rule_basis_gap", stats.max_basis_gap, tolerance_or(s, 1e-12)));
  r.summary.checks.push_back(lower("min_relative_eigenvalue", stats.min_eig, -1e-10));
  return r;
}

Json verdict_json(const std::string& name, const cpcheck::CpVerdict& v) {
  Json j{{"map", name}, {"cp", v.cp}, {"min_choi_eig", v.min_choi_eig}, {"witness", nullptr}};
  if (v.witness) {
    Json vec = Json::array();
    for (Eigen::Index i = 0; i < v.witness->eigenvector.size(); ++i) {
      vec.push_back(io::complex_to_json(v.witness->eigenvector(i)));
    }
    j["witness"] = {{"eigenvalue", v.witness->eigenvalue}, {"eigenvector", vec}};
  }
  return j;
}

Report run_cp_baseline(const Scenario& s) {
  const Json& p = s.params;
  const int n = param(p, "n", 2);
  const int unitaries = param(p, "unitaries", 20);
  const double depolarizing_p = param(p, "depolarizing_p", 0.5);
  if (n < 1 || n > 8 || unitaries < 0) throw ScenarioError("invalid cp_baseline parameters");

  Json verdicts = Json::array();
  Report r;
  const auto transpose = cpcheck::is_cp(cpcheck::transpose_map(n));
  verdicts.push_back(verdict_json("transpose", transpose));
  const double witness = transpose.witness ? transpose.witness->eigenvalue : 0.0;
  r.summary.checks.push_back(lower("transpose_classified_not_cp", transpose.cp ? 0.0 : 1.0, 1.0));
  r.summary.checks.push_back(upper("transpose_witness_deviation_from_-1", std::abs(witness + 1.0), tolerance_or(s, 1e-10)));

  const auto identity = cpcheck::is_cp(cpcheck::identity_channel(n));
  verdicts.push_back(verdict_json("identity", identity));
  const auto depol = cpcheck::is_cp(cpcheck::depolarizing(n, depolarizing_p));
  verdicts.push_back(verdict_json("depolarizing", depol));

  CaseGenerator gen(s.seed);
  int unitary_cp = 0;
  for (int i = 0; i < unitaries; ++i) {
    const auto v = cpcheck::is_cp(cpcheck::unitary_conjugation(gen.unitary(gen.uniform_int(2, 4))));
    verdicts.push_back(verdict_json("unitary_conjugation_" + std::to_string(i), v));
    unitary_cp += v.cp ? 1 : 0;
  }
  r.summary.checks.push_back(lower("identity_classified_cp", identity.cp ? 1.0 : 0.0, 1.0));
  r.summary.checks.push_back(lower("depolarizing_classified_cp", depol.cp ? 1.0 : 0.0, 1.0));
  r.summary.checks.push_back(lower("unitary_conjugations_classified_cp", unitary_cp, unitaries));
  r.details = {{"verdicts", verdicts}};
  return r;
}

weinberg::WeinbergParams weinberg_params(const Json& p) {
  weinberg::WeinbergParams w;
  w.e1 = param(p, "e1", w.e1);
  w.e2 = param(p, "e2", w.e2);
  w.eps = param(p, "eps", w.eps);
  w.alpha = complex_param(p, "alpha", std::cos(std::numbers::pi / 8));
  w.beta = complex_param(p, "beta", std::sin(std::numbers::pi / 8));
  try {
    w.validate();
  } catch (const LinalgError& e) {
    throw ScenarioError(e.what());
  }
  return w;
}

Report run_weinberg(const Scenario& s) {
  const Json& p = s.params;
  const auto w = weinberg_params(p);
  const double t_max = param(p, "t_max", 5.0);
  const double step = param(p, "step", 1e-3);
  const int points = param(p, "points", 501);
  if (!(t_max > 0.0) || !(step > 0.0) || points < 2) throw ScenarioError("invalid time parameters");
  const auto grid = linspace(0.0, t_max, points);

  const auto traj = weinberg::evolve(w, weinberg::singlet_closed_form(w, 0.0), grid, step);
  const double h0 = weinberg::composite_hamiltonian(w, traj.values.front());
  const double n0 = weinberg::norm2(traj.values.front());

  auto header = std::vector<std::string>{"t", "sigma_y_simulated", "sigma_y_closed_form"};
  const auto mh = matrix_header("rho2", 2);
  header.insert(header.end(), mh.begin(), mh.end());
  CsvBuilder csv(header);
  double coef_dev = 0.0, rho_dev = 0.0, signal_dev = 0.0, norm_drift = 0.0, energy_drift = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double t = traj.t[i];
    const auto& psi = traj.values[i];
    const auto closed = weinberg::singlet_closed_form(w, t);
    const Density rho2 = weinberg::rho2_reduced(psi);
    const double sy_sim = (qalg::pauli_y() * rho2.mat()).trace().real();
    const double sy_closed = weinberg::sigma_y_signal(w, t);
    coef_dev = std::max(coef_dev, (psi - closed).cwiseAbs().maxCoeff());
    rho_dev = std::max(rho_dev, qalg::norm_max(weinberg::rho2_reduced(closed).mat() - weinberg::rho2_formula(w, t)));
    signal_dev = std::max(signal_dev, std::abs(sy_sim - weinberg::sigma_y_formula(w, t)));
    norm_drift = std::max(norm_drift, std::abs(weinberg::norm2(psi) - n0));
    energy_drift = std::max(energy_drift, std::abs(weinberg::composite_hamiltonian(w, psi) - h0));
    std::vector<double> row{t, sy_sim, sy_closed};
    append_matrix(row, rho2.mat());
    csv.row(row);
  }
  Report r;
  r.csv = csv.str();
  r.details = {{"e1", w.e1}, {"e2", w.e2}, {"eps", w.eps}, {"alpha", io::complex_to_json(w.alpha)},
               {"beta", io::complex_to_json(w.beta)}, {"t_max", t_max}, {"step", step}};
  r.summary.checks.push_back(upper("max_coefficient_deviation", coef_dev, tolerance_or(s, 1e-6)));
  r.summary.checks.push_back(upper("max_rho2_formula_deviation", rho_dev, 1e-9));
  r.summary.checks.push_back(upper("max_sigma_y_deviation", signal_dev, 1e-6));
  r.summary.checks.push_back(upper("norm_drift", norm_drift, 1e-9));
  r.summary.checks.push_back(upper("energy_drift", energy_drift, 1e-9));
  return r;
}

Report run_mixtures(const Scenario& s) {
  const Json& p = s.params;
  mixtures::RandomPhaseState state{complex_param(p, "psi0", 1.0 / std::sqrt(2.0)),
                                   complex_param(p, "psi1", 1.0 / std::sqrt(2.0))};
  try {
    state.validate();
  } catch (const LinalgError& e) {
    throw ScenarioError(e.what());
  }
  const std::string which = param<std::string>(p, "observable", "quintic");
  const int nodes = param(p, "quadrature_n", 64);
  std::vector<double> alphas = linspace(0.0, 2.0 * std::numbers::pi, 257);
  alphas.pop_back();

  Report r;
  const double tol = tolerance_or(s, 1e-12);
  if (which == "linear") {
    const CMat a = matrix_param(p, "A", qalg::pauli_x() + qalg::pauli_z());
    const auto obs = mixtures::ObservableFn::linear(a);
    const double avg = mixtures::theta_average(state, obs, nodes);
    const double proj = mixtures::projector_mixture_average(mixtures::basis_projector_mixture(state), a);
    const double expected = std::norm(state.psi0) * a(0, 0).real() + std::norm(state.psi1) * a(1, 1).real();
    const double witness = mixtures::phase_dependence_witness(obs, state.at(0.0), alphas);
    r.details = {{"theta_average", avg}, {"projector_average", proj}, {"witness", witness}};
    r.summary.checks.push_back(upper("theta_average_vs_diagonal", std::abs(avg - expected), tol));
    r.summary.checks.push_back(upper("theta_average_vs_projector_mixture", std::abs(avg - proj), tol));
    r.summary.checks.push_back(upper("phase_witness", witness, tol));
  } else if (which == "quintic") {
    const auto obs = mixtures::ObservableFn::quintic();
    const double avg = mixtures::theta_average(state, obs, nodes);
    const double witness = mixtures::phase_dependence_witness(obs, state.at(0.0), alphas);
    r.details = {{"theta_average", avg}, {"projector_average", nullptr}, {"witness", witness}};
    r.summary.checks.push_back(upper("theta_average_abs", std::abs(avg), tol));
  } else {
    throw ScenarioError("observable must be 'linear' or 'quintic'");
  }
  return r;
}

Report run_homogeneity(const Scenario& s) {
  const Json& p = s.params;
  const auto ex = compose::FourBlockExample::standard();
  const CMat h = matrix_param(p, "h", qalg::pauli_z());
  const double coupling = param(p, "coupling", 1.0);
  const double t = param(p, "t", 1.0);
  const CMat rho = matrix_param(p, "rho", CMat(4.0 * ex.a + 2.0 * ex.b));
  const CMat one = qalg::identity(2);
  const CMat wa = matrix_param(p, "witness_a", CMat((one + qalg::pauli_x()) / 4.0));
  const CMat wb = matrix_param(p, "witness_b", CMat((one + qalg::pauli_z()) / 4.0));
  const auto lambdas = param(p, "lambdas", std::vector<double>{0.1, 1.0, 7.3});
  const hartree::MeanFieldFlow flow{h, coupling};
  const MatrixMap phi = [&flow, t](const CMat& a) { return hartree::flow_map(flow, t, a); };

  Report r;
  Json hom = Json::array();
  double worst = 0.0;
  for (double lambda : lambdas) {
    const double v = cpcheck::homogeneity_probe(phi, rho, lambda);
    hom.push_back({{"lambda", lambda}, {"defect", v}});
    worst = std::max(worst, v);
  }
  const double add = cpcheck::additivity_probe(phi, wa, wb);
  r.details = {{"homogeneity", hom}, {"additivity_defect", add}, {"t", t}, {"coupling", coupling}};
  r.summary.checks.push_back(upper("max_homogeneity_defect", worst, tolerance_or(s, 1e-12)));
  r.summary.checks.push_back(lower("additivity_defect", add, param(p, "min_additivity_defect", 1e-3)));
  return r;
}

}  // namespace

std::string to_string(Kind kind) {
  for (const auto& [k, label] : kKindNames) {
    if (k == kind) return label;
  }
  return "unknown";
}

Scenario parse_scenario(const Json& j) {
  if (!j.is_object()) throw ScenarioError("scenario must be a JSON object");
  if (!j.contains("kind") || !j.at("kind").is_string()) throw ScenarioError("scenario needs a string 'kind'");
  Scenario s;
  s.kind = kind_from_string(j.at("kind").get<std::string>());
  s.name = param<std::string>(j, "name", to_string(s.kind));
  if (s.name.empty() || s.name.find('/') != std::string::npos || s.name.find("..") != std::string::npos) {
    throw ScenarioError("scenario name must be a plain non-empty file name");
  }
  s.seed = param<std::uint64_t>(j, "seed", 1);
  if (j.contains("tolerance")) {
    const double tol = param<double>(j, "tolerance", 0.0);
    if (!(tol >= 0.0)) throw ScenarioError("tolerance must be >= 0");
    s.tolerance = tol;
  }
  if (j.contains("params")) {
    if (!j.at("params").is_object()) throw ScenarioError("'params' must be an object");
    s.params = j.at("params");
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw ScenarioError("malformed JSON in " + path.string() + ": " + e.what());
  }
  return parse_scenario(j);
}

Json to_json(const Scenario& s) {
  Json j{{"name", s.name}, {"kind", to_string(s.kind)}, {"seed", s.seed}, {"params", s.params}};
  if (s.tolerance) j["tolerance"] = *s.tolerance;
  return j;
}

Json Report::to_json() const {
  Json checks = Json::array();
  for (const Check& c : summary.checks) {
    checks.push_back({{"name", c.name},
                      {"value", c.value},
                      {"threshold", c.threshold},
                      {"bound", c.upper_bound ? "upper" : "lower"},
                      {"pass", c.pass}});
  }
  return Json{{"scenario", scenario::to_json(scenario)},
              {"details", details},
              {"summary",
               {{"max_deviation", summary.max_deviation},
                {"pass", summary.pass},
                {"wall_time_s", summary.wall_time_s},
                {"checks", checks}}}};
}

Report run(const Scenario& s) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    switch (s.kind) {
      case Kind::GisinTelegraph: r = run_gisin(s); break;
      case Kind::Consistency: r = run_consistency(s); break;
      case Kind::CpBaseline: r = run_cp_baseline(s); break;
      case Kind::WeinbergTelegraph: r = run_weinberg(s); break;
      case Kind::Mixtures: r = run_mixtures(s); break;
      case Kind::Homogeneity: r = run_homogeneity(s); break;
      case Kind::Sweep: r = run_sweep(s); break;
    }
  } catch (const LinalgError& e) {
    throw ScenarioError(std::string("invalid scenario parameters: ") + e.what());
  }
  r.scenario = s;
  r.summary.pass = std::all_of(r.summary.checks.begin(), r.summary.checks.end(),
                               [](const Check& c) { return c.pass; });
  for (const Check& c : r.summary.checks) {
    if (c.upper_bound) r.summary.max_deviation = std::max(r.summary.max_deviation, c.value);
  }
  r.summary.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void write_report(const Report& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  if (!report.csv.empty()) {
    std::ofstream csv(dir / "series.csv", std::ios::binary);
    if (!csv) throw std::runtime_error("cannot write " + (dir / "series.csv").string());
    csv << report.csv;
  }
  std::ofstream summary(dir / "summary.json");
  if (!summary) throw std::runtime_error("cannot write " + (dir / "summary.json").string());
  summary << report.to_json().dump(2) << '\n';
}

std::filesystem::path output_root() {
  if (const char* env = std::getenv("NONLINCP_OUT"); env != nullptr && *env != '\0') return env;
  return "nonlincp-out";
}

}  // namespace nonlincp::scenario
