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

// Dense complex linear algebra kernel shared by every other module.
//
// Matrices are plain Eigen::MatrixXcd values. Composite (bipartite) spaces
// use the factor-1-major index convention: |s> (x) |k> lives at row s*m + k,
// where m is the dimension of factor 2.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nonlincp {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

/// A (possibly nonlinear) map between square matrices.
using MatrixMap = std::function<CMat(const CMat&)>;

/// Raised for malformed matrices: wrong shape, non-finite entries,
/// tolerance violations of structural preconditions.
class LinalgError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a map is evaluated outside the set on which it is defined
/// (e.g. a trace-ratio formula on a traceless nonzero block).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kDefaultHermTol = 1e-10;
inline constexpr double kDefaultPsdTol = 1e-10;

namespace qalg {

CMat identity(int n);
CMat pauli_x();
CMat pauli_y();
CMat pauli_z();

/// Throws LinalgError unless `a` is square, non-empty and finite.
void require_square_finite(const CMat& a, std::string_view what);

double norm_max(const CMat& a);
double norm_fro(const CMat& a);
/// Operator 2-norm (largest singular value).
double norm_op2(const CMat& a);

/// max |a - a^dagger| entry.
double hermiticity_defect(const CMat& a);
/// Relative test: defect <= tol * (1 + max|a|).
bool is_hermitian(const CMat& a, double tol = kDefaultHermTol);
bool is_unitary(const CMat& u, double tol = 1e-10);

CMat commutator(const CMat& a, const CMat& b);
CMat kron(const CMat& a, const CMat& b);

/// Eigenvalues of a Hermitian matrix in ascending order.
RVec eigvals_herm(const CMat& a, double tol = kDefaultHermTol);
double min_eig_herm(const CMat& a, double tol = kDefaultHermTol);

/// exp(-i s H) for Hermitian H, via eigendecomposition of H.
CMat herm_exp(const CMat& h, double s, double tol = kDefaultHermTol);

/// Cached spectral decomposition H = V diag(w) V^dagger of a Hermitian
/// generator. Evaluating exp(-i z H) for many (possibly complex) z costs
/// one matrix product each.
class HermitianGenerator {
 public:
  explicit HermitianGenerator(const CMat& h, double tol = kDefaultHermTol);

  int dim() const { return static_cast<int>(eigenvalues_.size()); }
  const RVec& eigenvalues() const { return eigenvalues_; }
  const CMat& eigenvectors() const { return eigenvectors_; }

  /// exp(-i z H). Unitary only for real z.
  CMat propagator(Complex z) const;
  /// Conjugation exp(-i z H) a exp(+i z H).
  CMat conjugate(const CMat& a, Complex z) const;

 private:
  RVec eigenvalues_;
  CMat eigenvectors_;
};

// Partial traces on raw matrices; `a` must be (n*m) x (n*m).

/// Block (k,l) of a bipartite matrix: the n x n operator a_kl with
/// rho = sum_kl a_kl (x) |k><l|.
CMat block(const CMat& a, int n, int m, int k, int l);
/// Sum_k a_kk  (n x n).
CMat partial_trace_2(const CMat& a, int n, int m);
/// [Tr a_kl]_kl  (m x m).
CMat partial_trace_1(const CMat& a, int n, int m);

}  // namespace qalg

/// Hermitian, positive semidefinite matrix with strictly positive trace.
/// Normalisation to unit trace is not required and never imposed.
class Density {
 public:
  /// Validates `mat` and throws LinalgError on any violated invariant.
  explicit Density(CMat mat, double herm_tol = kDefaultHermTol,
                   double psd_tol = kDefaultPsdTol);

  const CMat& mat() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }
  double trace() const { return mat_.trace().real(); }
  double herm_tol() const { return herm_tol_; }
  double psd_tol() const { return psd_tol_; }

  Density scaled(double lambda) const;

 private:
  CMat mat_;
  double herm_tol_;
  double psd_tol_;
};

/// Density on an (n*m)-dimensional composite space, factor-1-major.
class Bipartite {
 public:
  Bipartite(Density dens, int n, int m);
  Bipartite(const CMat& mat, int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  const Density& dens() const { return dens_; }
  const CMat& mat() const { return dens_.mat(); }

  CMat block(int k, int l) const { return qalg::block(mat(), n_, m_, k, l); }

 private:
  Density dens_;
  int n_;
  int m_;
};

Bipartite product_state(const Density& rho1, const Density& rho2);
Density ptrace2(const Bipartite& rho);
Density ptrace1(const Bipartite& rho);

template <class T>
struct TimeSeries {
  std::vector<double> t;
  std::vector<T> values;

  std::size_t size() const { return t.size(); }
  void push(double time, T value) {
    t.push_back(time);
    values.push_back(std::move(value));
  }
};

/// `points` evenly spaced times in [start, stop], inclusive at both ends.
std::vector<double> linspace(double start, double stop, int points);

}  // namespace nonlincp
