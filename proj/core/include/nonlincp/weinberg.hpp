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

// Two-particle Weinberg model: a linear particle "1" and a nonlinear
// particle "2" with
//
//   H1(phi) = E1 <phi|phi>,
//   H2(chi) = E2 <chi|chi> + eps <chi|sigma_z|chi>^2 / <chi|chi>,
//
// composed as H(psi) = sum_l H1(phi_l) + sum_k H2(chi_k) where
// phi_l = sum_k psi_kl |k>, chi_k = sum_l psi_kl |l>. The row index k of
// the coefficient matrix psi refers to a basis |alpha,beta,r> of particle 1;
// the sum over k is what makes the composite Hamiltonian basis dependent.
//
// Dynamics: i d psi_kl / dt = dH / d conj(psi_kl).

#pragma once

#include "nonlincp/qalg.hpp"

#include <Eigen/Dense>

#include <vector>

namespace nonlincp::weinberg {

/// Coefficients psi_kl: row = particle 1, column = particle 2.
using PureState2 = Eigen::Matrix2cd;
using Spinor = Eigen::Vector2cd;

struct WeinbergParams {
  double e1 = 1.0;
  double e2 = 0.5;
  double eps = 0.1;
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};

  /// Throws LinalgError unless |alpha|^2 + |beta|^2 = 1 within 1e-12.
  void validate() const;
  /// U(alpha, beta) = [[alpha, beta], [-conj(beta), conj(alpha)]].
  Eigen::Matrix2cd basis_unitary() const;
};

class InstabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (|up,down> - |down,up>) / sqrt(2) in the product basis.
PureState2 singlet();

/// Coefficients in the |alpha,beta,r>|s> basis from product-basis ones:
/// psi_rot = U(alpha, beta) psi_prod. The inverse applies U^dagger.
PureState2 to_rotated_basis(const WeinbergParams& p, const PureState2& psi_product);
PureState2 to_product_basis(const WeinbergParams& p, const PureState2& psi_rotated);

double one_particle_hamiltonian(const WeinbergParams& p, const Spinor& chi);
/// dH2 / d conj(chi); zero-norm spinors map to zero.
Spinor one_particle_gradient(const WeinbergParams& p, const Spinor& chi);

/// Rows with <chi_k|chi_k> = 0 contribute E-terms only (removable singularity).
double composite_hamiltonian(const WeinbergParams& p, const PureState2& psi);
/// dH / d conj(psi_kl).
PureState2 composite_gradient(const WeinbergParams& p, const PureState2& psi);

double norm2(const PureState2& psi);

/// rk4 trajectory of the coefficient matrix (in the rotated basis). Throws
/// InstabilityError if the norm drifts by more than 1e-6.
TimeSeries<PureState2> evolve(const WeinbergParams& p, const PureState2& psi0,
                              const std::vector<double>& t_grid, double step = 1e-3);

/// Exact solution from the singlet, in the |alpha,beta,r>|s> basis.
PureState2 singlet_closed_form(const WeinbergParams& p, double t);

/// Reduced density of particle 2, Tr_1 |psi><psi| / <psi|psi>.
Density rho2_reduced(const PureState2& psi);
/// 1/2 + Re(conj(a) b) S sigma_y + Im(conj(a) b) S sigma_x,
/// S = sin(4 eps (|a|^2 - |b|^2) t).
CMat rho2_formula(const WeinbergParams& p, double t);
/// Tr(sigma_y rho2) on the closed-form singlet trajectory.
double sigma_y_signal(const WeinbergParams& p, double t);
/// 2 Re(conj(a) b) sin(4 eps (|a|^2 - |b|^2) t).
double sigma_y_formula(const WeinbergParams& p, double t);

/// Evolves chi1 and chi2 under i d chi/dt = dH2/d conj(chi) and samples
/// <chi1|chi2>.
TimeSeries<Complex> overlap_trajectory(const WeinbergParams& p, const Spinor& chi1,
                                       const Spinor& chi2, const std::vector<double>& t_grid,
                                       double step = 1e-3);

}  // namespace nonlincp::weinberg
