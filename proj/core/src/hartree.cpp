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

#include "nonlincp/hartree.hpp"

#include "nonlincp/integrate.hpp"

#include <string>

namespace nonlincp::hartree {

namespace {

void check_generator(const MeanFieldFlow& flow, Eigen::Index dim) {
  qalg::require_square_finite(flow.h, "MeanFieldFlow");
  if (!qalg::is_hermitian(flow.h)) throw LinalgError("MeanFieldFlow: generator must be Hermitian");
  if (flow.h.rows() != dim) {
    throw LinalgError("MeanFieldFlow: generator dimension " + std::to_string(flow.h.rows()) +
                      " does not match state dimension " + std::to_string(dim));
  }
}

void check_grid(const std::vector<double>& t_grid) {
  if (t_grid.empty() || t_grid.front() != 0.0) throw std::invalid_argument("time grid must start at 0");
  for (std::size_t i = 1; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > t_grid[i - 1])) throw std::invalid_argument("time grid must be strictly increasing");
  }
}

CMat lifted_generator(const CMat& h, int m) { return qalg::kron(h, CMat::Identity(m, m)); }

// Fixed-step rk4 with re-symmetrisation after each step.
std::vector<CMat> integrate_rk4(const MeanFieldFlow& flow, const CMat& rho0,
                                const std::vector<double>& t_grid, const Rk4& method,
                                double herm_drift_tol) {
  std::vector<CMat> samples;
  samples.reserve(t_grid.size());
  integrate::rk4_on_grid(
      [&flow](const CMat& rho) { return rhs(flow, rho); }, CMat(rho0), t_grid, method.step,
      [&samples](double, const CMat& rho) { samples.push_back(rho); },
      [herm_drift_tol](CMat& rho) {
        const double drift = qalg::hermiticity_defect(rho);
        if (drift > herm_drift_tol) {
          throw std::runtime_error("rk4 step rejected: Hermiticity drift " + std::to_string(drift));
        }
        rho = 0.5 * (rho + rho.adjoint()).eval();
      });
  return samples;
}

}  // namespace

double frequency(const MeanFieldFlow& flow, const Density& rho0) {
  check_generator(flow, rho0.dim());
  return flow.coupling * (flow.h * rho0.mat()).trace().real() / rho0.trace();
}

Complex frequency_of(const MeanFieldFlow& flow, const CMat& a) {
  check_generator(flow, a.rows());
  const Complex tr = a.trace();
  if (tr == Complex(0.0, 0.0)) {
    if (a.isZero(0.0)) return {0.0, 0.0};
    throw DomainError("mean-field frequency undefined: input has zero trace");
  }
  return flow.coupling * (flow.h * a).trace() / tr;
}

CMat flow_map(const MeanFieldFlow& flow, double t, const CMat& a) {
  const Complex w = frequency_of(flow, a);
  return qalg::HermitianGenerator(flow.h).conjugate(a, w * t);
}

CMat rhs(const MeanFieldFlow& flow, const CMat& rho) {
  const Complex tr = rho.trace();
  if (tr == Complex(0.0, 0.0)) throw DomainError("mean-field rhs: zero trace");
  const double c = flow.coupling * ((flow.h * rho).trace() / tr).real();
  return Complex(0.0, -c) * qalg::commutator(flow.h, rho);
}

TimeSeries<Density> propagate(const MeanFieldFlow& flow, const Density& rho0,
                              const std::vector<double>& t_grid, const FlowSpec& spec) {
  check_grid(t_grid);
  const double w = frequency(flow, rho0);
  TimeSeries<Density> out;
  if (std::holds_alternative<ClosedForm>(spec.method)) {
    const qalg::HermitianGenerator gen(flow.h);
    for (double t : t_grid) {
      out.push(t, Density(gen.conjugate(rho0.mat(), w * t), rho0.herm_tol(), rho0.psd_tol()));
    }
    return out;
  }
  const auto samples =
      integrate_rk4(flow, rho0.mat(), t_grid, std::get<Rk4>(spec.method), spec.herm_drift_tol);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    out.push(t_grid[i], Density(samples[i], rho0.herm_tol(), rho0.psd_tol()));
  }
  return out;
}

TimeSeries<Bipartite> propagate_composite(const MeanFieldFlow& flow, const Bipartite& rho0,
                                          const std::vector<double>& t_grid,
                                          const FlowSpec& spec) {
  check_generator(flow, rho0.n());
  check_grid(t_grid);
  const MeanFieldFlow lifted{lifted_generator(flow.h, rho0.m()), flow.coupling};
  const double w = frequency(lifted, rho0.dens());
  const auto& d = rho0.dens();
  TimeSeries<Bipartite> out;
  if (std::holds_alternative<ClosedForm>(spec.method)) {
    const qalg::HermitianGenerator gen(lifted.h);
    for (double t : t_grid) {
      out.push(t, Bipartite(Density(gen.conjugate(d.mat(), w * t), d.herm_tol(), d.psd_tol()),
                            rho0.n(), rho0.m()));
    }
    return out;
  }
  const auto samples =
      integrate_rk4(lifted, d.mat(), t_grid, std::get<Rk4>(spec.method), spec.herm_drift_tol);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    out.push(t_grid[i], Bipartite(Density(samples[i], d.herm_tol(), d.psd_tol()), rho0.n(), rho0.m()));
  }
  return out;
}

Density solve_mean_field(const CMat& q, const Density& rho0, double t) {
  const MeanFieldFlow flow{q, 1.0};
  const double w = frequency(flow, rho0);
  return Density(qalg::HermitianGenerator(q).conjugate(rho0.mat(), w * t), rho0.herm_tol(),
                 rho0.psd_tol());
}

}  // namespace nonlincp::hartree
