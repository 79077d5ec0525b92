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

// Mean-field (Hartree-type) nonlinear Liouville-von Neumann flows
//
//   d rho/dt = -i c (Tr h rho / Tr rho) [h, rho]
//
// with coupling c = 1 for h(rho) = Tr(Q rho) Q / Tr rho and c = 2 for the
// flow generated by H(rho) = (Tr h rho)^2 / Tr rho. The frequency
// omega = c Tr(h rho)/Tr rho is conserved, so the exact solution is
// rho(t) = exp(-i omega h t) rho(0) exp(+i omega h t).

#pragma once

#include "nonlincp/qalg.hpp"

#include <variant>
#include <vector>

namespace nonlincp::hartree {

struct MeanFieldFlow {
  CMat h;
  double coupling = 2.0;
};

struct ClosedForm {};
struct Rk4 {
  double step = 1e-3;
};

struct FlowSpec {
  std::variant<ClosedForm, Rk4> method = ClosedForm{};
  /// An rk4 step whose result has Hermiticity defect above this is rejected.
  double herm_drift_tol = 1e-8;
};

/// coupling * Tr(h rho0) / Tr rho0. Throws DomainError on zero trace.
double frequency(const MeanFieldFlow& flow, const Density& rho0);

/// Same ratio for an arbitrary square matrix; complex when Tr(h a) or Tr a
/// is. The zero matrix maps to frequency 0; any other traceless input throws.
Complex frequency_of(const MeanFieldFlow& flow, const CMat& a);

/// Closed-form flow map at time t applied to any square matrix `a`:
/// exp(-i w h t) a exp(+i w h t) with w = frequency_of(flow, a). For
/// non-Hermitian `a` with complex w the conjugation is not unitary.
CMat flow_map(const MeanFieldFlow& flow, double t, const CMat& a);

/// Right-hand side -i c (Tr h rho/Tr rho) [h, rho].
CMat rhs(const MeanFieldFlow& flow, const CMat& rho);

/// Samples the flow on `t_grid`, which must start at 0 and increase strictly.
TimeSeries<Density> propagate(const MeanFieldFlow& flow, const Density& rho0,
                              const std::vector<double>& t_grid, const FlowSpec& spec = {});

/// Evolves with generator h (x) 1_m and frequency fixed by Tr_2 rho0.
TimeSeries<Bipartite> propagate_composite(const MeanFieldFlow& flow, const Bipartite& rho0,
                                          const std::vector<double>& t_grid,
                                          const FlowSpec& spec = {});

/// phi^t(rho0) = exp(-i h(rho) t) rho0 exp(i h(rho) t), h(rho) = Tr(Q rho) Q / Tr rho.
Density solve_mean_field(const CMat& q, const Density& rho0, double t);

}  // namespace nonlincp::hartree
