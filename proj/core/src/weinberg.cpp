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

#include "nonlincp/weinberg.hpp"

#include "nonlincp/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nonlincp::weinberg {

namespace {

constexpr Complex kMinusI{0.0, -1.0};

// Row-wise nonlinear term eps * s^2 / n with s = |c0|^2 - |c1|^2, n = |c0|^2 + |c1|^2.
double row_nonlinear(double eps, const Complex& c0, const Complex& c1) {
  const double n = std::norm(c0) + std::norm(c1);
  if (n == 0.0) return 0.0;
  const double s = std::norm(c0) - std::norm(c1);
  return eps * s * s / n;
}

// d(eps s^2/n)/d conj(c_l) = eps (2 s sigma_l / n - s^2 / n^2) c_l.
Spinor row_nonlinear_gradient(double eps, const Complex& c0, const Complex& c1) {
  const double n = std::norm(c0) + std::norm(c1);
  if (n == 0.0) return Spinor::Zero();
  const double s = std::norm(c0) - std::norm(c1);
  const double base = -s * s / (n * n);
  return Spinor(eps * (2.0 * s / n + base) * c0, eps * (-2.0 * s / n + base) * c1);
}

}  // namespace

void WeinbergParams::validate() const {
  const double unit = std::norm(alpha) + std::norm(beta);
  if (std::abs(unit - 1.0) > 1e-12) {
    throw LinalgError("WeinbergParams: |alpha|^2 + |beta|^2 = " + std::to_string(unit) + ", expected 1");
  }
  if (!std::isfinite(e1) || !std::isfinite(e2) || !std::isfinite(eps)) {
    throw LinalgError("WeinbergParams: energies must be finite");
  }
}

Eigen::Matrix2cd WeinbergParams::basis_unitary() const {
  Eigen::Matrix2cd u;
  u << alpha, beta, -std::conj(beta), std::conj(alpha);
  return u;
}

PureState2 singlet() {
  const double r = 1.0 / std::sqrt(2.0);
  PureState2 psi;
  psi << 0.0, r, -r, 0.0;
  return psi;
}

PureState2 to_rotated_basis(const WeinbergParams& p, const PureState2& psi_product) {
  return p.basis_unitary() * psi_product;
}

PureState2 to_product_basis(const WeinbergParams& p, const PureState2& psi_rotated) {
  return p.basis_unitary().adjoint() * psi_rotated;
}

double one_particle_hamiltonian(const WeinbergParams& p, const Spinor& chi) {
  return p.e2 * chi.squaredNorm() + row_nonlinear(p.eps, chi(0), chi(1));
}

Spinor one_particle_gradient(const WeinbergParams& p, const Spinor& chi) {
  return p.e2 * chi + row_nonlinear_gradient(p.eps, chi(0), chi(1));
}

double norm2(const PureState2& psi) { return psi.squaredNorm(); }

double composite_hamiltonian(const WeinbergParams& p, const PureState2& psi) {
  // sum_l E1 <phi_l|phi_l> = E1 |psi|^2 and sum_k E2 <chi_k|chi_k> = E2 |psi|^2.
  double h = (p.e1 + p.e2) * norm2(psi);
  for (int k = 0; k < 2; ++k) h += row_nonlinear(p.eps, psi(k, 0), psi(k, 1));
  return h;
}

PureState2 composite_gradient(const WeinbergParams& p, const PureState2& psi) {
  PureState2 g = (p.e1 + p.e2) * psi;
  for (int k = 0; k < 2; ++k) {
    const Spinor row = row_nonlinear_gradient(p.eps, psi(k, 0), psi(k, 1));
    g(k, 0) += row(0);
    g(k, 1) += row(1);
  }
  return g;
}

TimeSeries<PureState2> evolve(const WeinbergParams& p, const PureState2& psi0,
                              const std::vector<double>& t_grid, double step) {
  p.validate();
  if (!psi0.allFinite()) throw LinalgError("evolve: initial state has non-finite entries");
  const double n0 = norm2(psi0);
  TimeSeries<PureState2> out;
  integrate::rk4_on_grid(
      [&p](const PureState2& psi) { return PureState2(kMinusI * composite_gradient(p, psi)); },
      psi0, t_grid, step, [&out](double t, const PureState2& psi) { out.push(t, psi); },
      [n0](PureState2& psi) {
        const double drift = std::abs(norm2(psi) - n0);
        if (!(drift <= 1e-6)) {
          throw InstabilityError("Weinberg evolution unstable: norm drift " + std::to_string(drift) +
                                 "; reduce the step");
        }
      });
  return out;
}

PureState2 singlet_closed_form(const WeinbergParams& p, double t) {
  p.validate();
  const Complex a = p.alpha, b = p.beta;
  const double x = std::norm(b) - std::norm(a);
  const Complex global = std::exp(kMinusI * (p.e1 + p.e2 - p.eps * x * x) * t);
  const Complex slow = std::exp(kMinusI * 2.0 * p.eps * x * t);  // e^{-i 2 eps X t}
  const Complex fast = std::conj(slow);                           // e^{+i 2 eps X t}
  PureState2 psi;
  psi << -b * slow, a * fast, -std::conj(a) * fast, -std::conj(b) * slow;
  return (global / std::sqrt(2.0)) * psi;
}

Density rho2_reduced(const PureState2& psi) {
  const double n = norm2(psi);
  if (n == 0.0) throw DomainError("rho2_reduced: zero state");
  // (rho2)_{ss'} = sum_r psi_rs conj(psi_rs')
  const Eigen::Matrix2cd rho = psi.transpose() * psi.conjugate();
  return Density(CMat(rho / n));
}

namespace {

double telegraph_sine(const WeinbergParams& p, double t) {
  return std::sin(4.0 * p.eps * (std::norm(p.alpha) - std::norm(p.beta)) * t);
}

}  // namespace

CMat rho2_formula(const WeinbergParams& p, double t) {
  const Complex ab = std::conj(p.alpha) * p.beta;
  const double s = telegraph_sine(p, t);
  return 0.5 * qalg::identity(2) + ab.real() * s * qalg::pauli_y() + ab.imag() * s * qalg::pauli_x();
}

double sigma_y_signal(const WeinbergParams& p, double t) {
  return (qalg::pauli_y() * rho2_reduced(singlet_closed_form(p, t)).mat()).trace().real();
}

double sigma_y_formula(const WeinbergParams& p, double t) {
  return 2.0 * (std::conj(p.alpha) * p.beta).real() * telegraph_sine(p, t);
}

TimeSeries<Complex> overlap_trajectory(const WeinbergParams& p, const Spinor& chi1,
                                       const Spinor& chi2, const std::vector<double>& t_grid,
                                       double step) {
  if (chi1.squaredNorm() == 0.0 || chi2.squaredNorm() == 0.0) {
    throw DomainError("overlap_trajectory: spinors must be nonzero");
  }
  // Both spinors evolve independently; stack them as the rows of one matrix.
  PureState2 pair;
  pair.row(0) = chi1.transpose();
  pair.row(1) = chi2.transpose();
  const double n1 = chi1.squaredNorm(), n2 = chi2.squaredNorm();
  TimeSeries<Complex> out;
  integrate::rk4_on_grid(
      [&p](const PureState2& s) {
        PureState2 d;
        d.row(0) = (kMinusI * one_particle_gradient(p, s.row(0).transpose())).transpose();
        d.row(1) = (kMinusI * one_particle_gradient(p, s.row(1).transpose())).transpose();
        return d;
      },
      pair, t_grid, step,
      [&out](double t, const PureState2& s) { out.push(t, s.row(0).dot(s.row(1))); },
      [n1, n2](PureState2& s) {
        const double drift =
            std::max(std::abs(s.row(0).squaredNorm() - n1), std::abs(s.row(1).squaredNorm() - n2));
        if (!(drift <= 1e-6)) {
          throw InstabilityError("one-particle evolution unstable: norm drift " + std::to_string(drift));
        }
      });
  return out;
}

}  // namespace nonlincp::weinberg
