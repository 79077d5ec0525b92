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

#include "nonlincp/qalg.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace nonlincp {
namespace qalg {

CMat identity(int n) { return CMat::Identity(n, n); }

CMat pauli_x() {
  CMat s(2, 2);
  s << 0.0, 1.0, 1.0, 0.0;
  return s;
}

CMat pauli_y() {
  CMat s(2, 2);
  s << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return s;
}

CMat pauli_z() {
  CMat s(2, 2);
  s << 1.0, 0.0, 0.0, -1.0;
  return s;
}

void require_square_finite(const CMat& a, std::string_view what) {
  if (a.rows() == 0 || a.rows() != a.cols()) {
    throw LinalgError(std::string(what) + ": expected a non-empty square matrix, got " +
                      std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  if (!a.allFinite()) {
    throw LinalgError(std::string(what) + ": matrix has non-finite entries");
  }
}

double norm_max(const CMat& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

double norm_fro(const CMat& a) { return a.norm(); }

double norm_op2(const CMat& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMat> svd(a);
  return svd.singularValues()(0);
}

double hermiticity_defect(const CMat& a) { return norm_max(a - a.adjoint()); }

bool is_hermitian(const CMat& a, double tol) {
  return a.rows() == a.cols() && hermiticity_defect(a) <= tol * (1.0 + norm_max(a));
}

bool is_unitary(const CMat& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return norm_max(u * u.adjoint() - CMat::Identity(u.rows(), u.cols())) <= tol;
}

CMat commutator(const CMat& a, const CMat& b) { return a * b - b * a; }

CMat kron(const CMat& a, const CMat& b) {
  const Eigen::Index ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  CMat out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i) {
    for (Eigen::Index j = 0; j < ca; ++j) {
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    }
  }
  return out;
}

namespace {

void require_hermitian(const CMat& a, double tol, std::string_view what) {
  require_square_finite(a, what);
  if (!is_hermitian(a, tol)) {
    throw LinalgError(std::string(what) + ": matrix is not Hermitian (defect " +
                      std::to_string(hermiticity_defect(a)) + ")");
  }
}

CMat hermitian_part(const CMat& a) { return 0.5 * (a + a.adjoint()); }

}  // namespace

RVec eigvals_herm(const CMat& a, double tol) {
  require_hermitian(a, tol, "eigvals_herm");
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(a), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double min_eig_herm(const CMat& a, double tol) { return eigvals_herm(a, tol)(0); }

HermitianGenerator::HermitianGenerator(const CMat& h, double tol) {
  require_hermitian(h, tol, "HermitianGenerator");
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(h));
  eigenvalues_ = es.eigenvalues();
  eigenvectors_ = es.eigenvectors();
}

CMat HermitianGenerator::propagator(Complex z) const {
  const Complex minus_i(0.0, -1.0);
  CVec phases(dim());
  for (int j = 0; j < dim(); ++j) phases(j) = std::exp(minus_i * z * eigenvalues_(j));
  return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

CMat HermitianGenerator::conjugate(const CMat& a, Complex z) const {
  // In the eigenbasis the conjugation is an entrywise phase multiplication:
  // (V^dag a V)_jk -> exp(-i z (w_j - w_k)) (V^dag a V)_jk.
  const Complex minus_i(0.0, -1.0);
  CMat rotated = eigenvectors_.adjoint() * a * eigenvectors_;
  for (int j = 0; j < dim(); ++j) {
    for (int k = 0; k < dim(); ++k) {
      if (j != k) rotated(j, k) *= std::exp(minus_i * z * (eigenvalues_(j) - eigenvalues_(k)));
    }
  }
  return eigenvectors_ * rotated * eigenvectors_.adjoint();
}

CMat herm_exp(const CMat& h, double s, double tol) {
  return HermitianGenerator(h, tol).propagator(Complex(s, 0.0));
}

namespace {

void require_bipartite_shape(const CMat& a, int n, int m) {
  if (n <= 0 || m <= 0 || a.rows() != static_cast<Eigen::Index>(n) * m || a.cols() != a.rows()) {
    throw LinalgError("bipartite matrix must be (n*m)x(n*m) with n=" + std::to_string(n) +
                      ", m=" + std::to_string(m) + ", got " + std::to_string(a.rows()) + "x" +
                      std::to_string(a.cols()));
  }
}

}  // namespace

CMat block(const CMat& a, int n, int m, int k, int l) {
  require_bipartite_shape(a, n, m);
  if (k < 0 || k >= m || l < 0 || l >= m) throw LinalgError("block index out of range");
  CMat out(n, n);
  for (int s = 0; s < n; ++s) {
    for (int sp = 0; sp < n; ++sp) out(s, sp) = a(s * m + k, sp * m + l);
  }
  return out;
}

CMat partial_trace_2(const CMat& a, int n, int m) {
  require_bipartite_shape(a, n, m);
  CMat out = CMat::Zero(n, n);
  for (int s = 0; s < n; ++s) {
    for (int sp = 0; sp < n; ++sp) {
      for (int k = 0; k < m; ++k) out(s, sp) += a(s * m + k, sp * m + k);
    }
  }
  return out;
}

CMat partial_trace_1(const CMat& a, int n, int m) {
  require_bipartite_shape(a, n, m);
  CMat out = CMat::Zero(m, m);
  for (int k = 0; k < m; ++k) {
    for (int l = 0; l < m; ++l) {
      for (int s = 0; s < n; ++s) out(k, l) += a(s * m + k, s * m + l);
    }
  }
  return out;
}

}  // namespace qalg

Density::Density(CMat mat, double herm_tol, double psd_tol)
    : mat_(std::move(mat)), herm_tol_(herm_tol), psd_tol_(psd_tol) {
  qalg::require_square_finite(mat_, "Density");
  if (herm_tol_ < 0.0 || psd_tol_ < 0.0) throw LinalgError("Density: tolerances must be >= 0");
  if (!qalg::is_hermitian(mat_, herm_tol_)) {
    throw LinalgError("Density: matrix is not Hermitian (defect " +
                      std::to_string(qalg::hermiticity_defect(mat_)) + ")");
  }
  const Complex tr = mat_.trace();
  if (!(tr.real() > 0.0) || std::abs(tr.imag()) > herm_tol_ * (1.0 + std::abs(tr.real()))) {
    throw LinalgError("Density: trace must be real and strictly positive");
  }
  const double lowest = qalg::min_eig_herm(mat_, herm_tol_);
  if (lowest < -psd_tol_ * (1.0 + qalg::norm_op2(mat_))) {
    throw LinalgError("Density: matrix is not positive semidefinite (min eigenvalue " +
                      std::to_string(lowest) + ")");
  }
}

Density Density::scaled(double lambda) const {
  return Density(lambda * mat_, herm_tol_, psd_tol_);
}

Bipartite::Bipartite(Density dens, int n, int m) : dens_(std::move(dens)), n_(n), m_(m) {
  if (n_ <= 0 || m_ <= 0 || dens_.dim() != n_ * m_) {
    throw LinalgError("Bipartite: density dimension " + std::to_string(dens_.dim()) +
                      " does not factor as " + std::to_string(n_) + "*" + std::to_string(m_));
  }
}

Bipartite::Bipartite(const CMat& mat, int n, int m) : Bipartite(Density(mat), n, m) {}

Bipartite product_state(const Density& rho1, const Density& rho2) {
  return Bipartite(qalg::kron(rho1.mat(), rho2.mat()), rho1.dim(), rho2.dim());
}

Density ptrace2(const Bipartite& rho) {
  return Density(qalg::partial_trace_2(rho.mat(), rho.n(), rho.m()), rho.dens().herm_tol(),
                 rho.dens().psd_tol());
}

Density ptrace1(const Bipartite& rho) {
  return Density(qalg::partial_trace_1(rho.mat(), rho.n(), rho.m()), rho.dens().herm_tol(),
                 rho.dens().psd_tol());
}

std::vector<double> linspace(double start, double stop, int points) {
  if (points < 1) throw std::invalid_argument("linspace: points must be >= 1");
  std::vector<double> out(static_cast<std::size_t>(points));
  if (points == 1) {
    out[0] = start;
    return out;
  }
  const double step = (stop - start) / (points - 1);
  for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = start + step * i;
  out.back() = stop;
  return out;
}

}  // namespace nonlincp
