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

#include "nonlincp/mixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nonlincp::mixtures {

void RandomPhaseState::validate() const {
  const double n = std::norm(psi0) + std::norm(psi1);
  if (std::abs(n - 1.0) > 1e-12) {
    throw LinalgError("RandomPhaseState: |psi0|^2 + |psi1|^2 = " + std::to_string(n) + ", expected 1");
  }
}

StateVector RandomPhaseState::at(double theta) const {
  return StateVector(psi0, std::polar(1.0, theta) * psi1);
}

ObservableFn ObservableFn::linear(const CMat& a) {
  if (a.rows() != 2 || a.cols() != 2 || !qalg::is_hermitian(a)) {
    throw LinalgError("linear observable must be a Hermitian 2x2 matrix");
  }
  const Eigen::Matrix2cd m = a;
  return ObservableFn(
      ObservableKind::Linear,
      [m](const StateVector& psi) { return psi.dot(m * psi).real(); }, "linear", a);
}

ObservableFn ObservableFn::quintic() {
  return ObservableFn(
      ObservableKind::Quintic,
      [](const StateVector& psi) { return std::pow(2.0 * psi(1).real(), 5); }, "quintic");
}

ObservableFn ObservableFn::custom(std::function<double(const StateVector&)> fn, std::string label) {
  if (!fn) throw std::invalid_argument("custom observable: empty evaluator");
  return ObservableFn(ObservableKind::Custom, std::move(fn), std::move(label));
}

const CMat& ObservableFn::matrix() const {
  if (kind_ != ObservableKind::Linear) {
    throw std::logic_error("observable '" + label_ + "' is not linear and has no matrix");
  }
  return matrix_;
}

double theta_average(const RandomPhaseState& s, const ObservableFn& a, int quadrature_n) {
  s.validate();
  if (quadrature_n < 16 || quadrature_n % 2 != 0) {
    throw std::invalid_argument("theta_average: quadrature_n must be even and >= 16");
  }
  if (s.psi1 == Complex(0.0, 0.0)) return a(s.at(0.0));
  double sum = 0.0;
  const double dtheta = 2.0 * std::numbers::pi / quadrature_n;
  for (int j = 0; j < quadrature_n; ++j) sum += a(s.at(j * dtheta));
  return sum / quadrature_n;
}

double phase_dependence_witness(const ObservableFn& a, const StateVector& psi,
                                const std::vector<double>& alpha_grid) {
  const double base = a(psi);
  double worst = 0.0;
  for (double alpha : alpha_grid) {
    worst = std::max(worst, std::abs(a(std::polar(1.0, alpha) * psi) - base));
  }
  return worst;
}

double projector_mixture_average(const std::vector<std::pair<double, CMat>>& mixture,
                                 const CMat& a_linear) {
  if (mixture.empty()) throw LinalgError("projector mixture is empty");
  double total_weight = 0.0;
  double average = 0.0;
  for (const auto& [p, proj] : mixture) {
    if (p < 0.0) throw LinalgError("projector mixture: negative weight");
    if (proj.rows() != a_linear.rows() || proj.cols() != a_linear.cols()) {
      throw LinalgError("projector mixture: dimension mismatch");
    }
    if (!qalg::is_hermitian(proj) || qalg::norm_max(proj * proj - proj) > 1e-10) {
      throw LinalgError("projector mixture: component is not a projector");
    }
    total_weight += p;
    average += p * (a_linear * proj).trace().real();
  }
  if (std::abs(total_weight - 1.0) > 1e-12) {
    throw LinalgError("projector mixture: weights sum to " + std::to_string(total_weight));
  }
  return average;
}

std::vector<std::pair<double, CMat>> basis_projector_mixture(const RandomPhaseState& s) {
  CMat p0 = CMat::Zero(2, 2), p1 = CMat::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  return {{std::norm(s.psi0), p0}, {std::norm(s.psi1), p1}};
}

}  // namespace nonlincp::mixtures
