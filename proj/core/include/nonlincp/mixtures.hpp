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

// Random-phase mixtures of a two-level pure state and averages of linear
// and nonlinear observables over the random phase.

#pragma once

#include "nonlincp/qalg.hpp"

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace nonlincp::mixtures {

using StateVector = Eigen::Vector2cd;

/// |psi_theta> = psi0 |0> + e^{i theta} psi1 |1>.
struct RandomPhaseState {
  Complex psi0;
  Complex psi1;

  /// Throws LinalgError unless |psi0|^2 + |psi1|^2 = 1 within 1e-12.
  void validate() const;
  StateVector at(double theta) const;
};

enum class ObservableKind { Linear, Quintic, Custom };

/// Real-valued function A(|psi>, <psi|) on state vectors.
class ObservableFn {
 public:
  /// <psi|A|psi> for Hermitian A.
  static ObservableFn linear(const CMat& a);
  /// (psi1 + conj(psi1))^5.
  static ObservableFn quintic();
  static ObservableFn custom(std::function<double(const StateVector&)> fn,
                             std::string label = "custom");

  double operator()(const StateVector& psi) const { return fn_(psi); }
  ObservableKind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  /// The matrix of a linear observable; throws std::logic_error otherwise.
  const CMat& matrix() const;

 private:
  ObservableFn(ObservableKind kind, std::function<double(const StateVector&)> fn,
               std::string label, CMat matrix = {})
      : kind_(kind), fn_(std::move(fn)), label_(std::move(label)), matrix_(std::move(matrix)) {}

  ObservableKind kind_;
  std::function<double(const StateVector&)> fn_;
  std::string label_;
  CMat matrix_;
};

/// (1/2pi) int_0^{2pi} A(psi_theta) d theta on a uniform grid of
/// `quadrature_n` nodes (exact for trigonometric polynomials of degree
/// < quadrature_n). quadrature_n must be even and >= 16.
double theta_average(const RandomPhaseState& s, const ObservableFn& a, int quadrature_n = 64);

/// max over alpha of |A(e^{i alpha} psi) - A(psi)|. Positive values certify
/// that A is not a function of the projector |psi><psi|.
double phase_dependence_witness(const ObservableFn& a, const StateVector& psi,
                                const std::vector<double>& alpha_grid);

/// sum_k p_k Tr(A rho_k) for projectors rho_k. Only matrices are accepted
/// as observables: a nonlinear A has no projector-mixture average.
double projector_mixture_average(const std::vector<std::pair<double, CMat>>& mixture,
                                 const CMat& a_linear);

/// The two-projector mixture {(|psi0|^2, |0><0|), (|psi1|^2, |1><1|)}.
std::vector<std::pair<double, CMat>> basis_projector_mixture(const RandomPhaseState& s);

}  // namespace nonlincp::mixtures
