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

#include "nonlincp/cpcheck.hpp"

#include "nonlincp/random.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace nonlincp::cpcheck {

namespace {

CVec vec(const CMat& x) { return Eigen::Map<const CVec>(x.data(), x.size()); }

CMat unvec(const CVec& v, int n) { return Eigen::Map<const CMat>(v.data(), n, n); }

CMat unit(int n, int k, int l) {
  CMat e = CMat::Zero(n, n);
  e(k, l) = 1.0;
  return e;
}

}  // namespace

double linearity_defect(int n, const MatrixMap& fn, int probes, std::uint64_t seed) {
  CaseGenerator gen(seed);
  double worst = 0.0;
  for (int i = 0; i < probes; ++i) {
    const CMat x = gen.complex_matrix(n, n);
    const CMat y = gen.complex_matrix(n, n);
    const double ar = gen.uniform(), ai = gen.uniform(), br = gen.uniform(), bi = gen.uniform();
    const Complex a(ar, ai), b(br, bi);
    const CMat lx = fn(x);
    const CMat ly = fn(y);
    const CMat combined = fn(a * x + b * y);
    const double scale = 1.0 + qalg::norm_max(lx) + qalg::norm_max(ly);
    worst = std::max(worst, qalg::norm_max(combined - a * lx - b * ly) / scale);
  }
  return worst;
}

LinearMap LinearMap::from_superoperator(const CMat& superop, std::string label) {
  qalg::require_square_finite(superop, "LinearMap superoperator");
  const auto n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(superop.rows()))));
  if (n * n != superop.rows()) throw LinalgError("superoperator dimension must be a perfect square");
  return LinearMap(n, superop, std::move(label));
}

LinearMap LinearMap::from_function(int n, MatrixMap fn, std::string label,
                                   std::uint64_t probe_seed) {
  if (n <= 0 || !fn) throw LinalgError("LinearMap: invalid function map");
  const double defect = linearity_defect(n, fn, kProbes, probe_seed);
  if (defect > kProbeTol) {
    throw NonlinearMapError("map '" + label + "' failed linearity probe (defect " +
                            std::to_string(defect) + ")");
  }
  return LinearMap(n, std::move(fn), std::move(label));
}

CMat LinearMap::apply(const CMat& x) const {
  if (x.rows() != dim_ || x.cols() != dim_) throw LinalgError("LinearMap: input dimension mismatch");
  if (const auto* s = std::get_if<CMat>(&action_)) return unvec(*s * vec(x), dim_);
  return std::get<MatrixMap>(action_)(x);
}

LinearMap identity_channel(int n) {
  return LinearMap::from_superoperator(CMat::Identity(n * n, n * n), "identity");
}

LinearMap transpose_map(int n) {
  CMat s = CMat::Zero(n * n, n * n);
  // vec(X^T)_{i + n j} = X_ji = vec(X)_{j + n i}
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s(i + n * j, j + n * i) = 1.0;
  }
  return LinearMap::from_superoperator(s, "transpose");
}

LinearMap unitary_conjugation(const CMat& u) {
  if (!qalg::is_unitary(u)) throw LinalgError("unitary_conjugation: matrix is not unitary");
  // vec(U X U^dag) = (conj(U) (x) U) vec(X) for column stacking.
  return LinearMap::from_superoperator(qalg::kron(u.conjugate(), u), "unitary_conjugation");
}

LinearMap depolarizing(int n, double p) {
  return LinearMap::from_function(
      n,
      [n, p](const CMat& x) {
        return CMat((1.0 - p) * x + p * x.trace() * CMat::Identity(n, n) / static_cast<double>(n));
      },
      "depolarizing");
}

CMat choi(const LinearMap& map) {
  const int n = map.dim();
  CMat c = CMat::Zero(n * n, n * n);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) c += qalg::kron(map.apply(unit(n, k, l)), unit(n, k, l));
  }
  return c;
}

CpVerdict is_cp(const LinearMap& map, double rel_tol) {
  const CMat c = choi(map);
  if (!qalg::is_hermitian(c, 1e-10)) {
    throw LinalgError("is_cp: Choi matrix is not Hermitian; map does not preserve Hermiticity");
  }
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (c + c.adjoint()));
  CpVerdict verdict;
  verdict.min_choi_eig = es.eigenvalues()(0);
  verdict.cp = verdict.min_choi_eig >= -rel_tol * qalg::norm_op2(c);
  if (!verdict.cp) verdict.witness = CpWitness{verdict.min_choi_eig, es.eigenvectors().col(0)};
  return verdict;
}

double homogeneity_probe(const MatrixMap& phi, const CMat& rho, double lambda) {
  return qalg::norm_op2(phi(lambda * rho) - lambda * phi(rho));
}

double additivity_probe(const MatrixMap& phi, const CMat& a, const CMat& b) {
  return qalg::norm_op2(phi(a + b) - phi(a) - phi(b));
}

}  // namespace nonlincp::cpcheck
