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

// Complete-positivity baseline for linear maps (Choi test) and
// homogeneity / additivity probes for arbitrary maps.

#pragma once

#include "nonlincp/qalg.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace nonlincp::cpcheck {

class NonlinearMapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Linear map on n x n matrices, given either as an n^2 x n^2
/// superoperator acting on column-stacked vec(X) (vec(X)_{i + n j} = X_ij)
/// or as a function certified linear by randomized probing.
class LinearMap {
 public:
  static constexpr int kProbes = 20;
  static constexpr double kProbeTol = 1e-10;

  static LinearMap from_superoperator(const CMat& superop, std::string label = "superoperator");
  /// Throws NonlinearMapError if any probe violates linearity.
  static LinearMap from_function(int n, MatrixMap fn, std::string label = "function",
                                 std::uint64_t probe_seed = 0x5eed);

  int dim() const { return dim_; }
  const std::string& label() const { return label_; }
  CMat apply(const CMat& x) const;

 private:
  LinearMap(int dim, std::variant<CMat, MatrixMap> action, std::string label)
      : dim_(dim), action_(std::move(action)), label_(std::move(label)) {}

  int dim_;
  std::variant<CMat, MatrixMap> action_;
  std::string label_;
};

/// Largest violation of L(a X + b Y) = a L(X) + b L(Y) over `probes` random
/// complex (a, b, X, Y), relative to 1 + |L(X)| + |L(Y)|.
double linearity_defect(int n, const MatrixMap& fn, int probes, std::uint64_t seed);

LinearMap identity_channel(int n);
LinearMap transpose_map(int n);
LinearMap unitary_conjugation(const CMat& u);
/// rho -> (1 - p) rho + p Tr(rho) 1/n.
LinearMap depolarizing(int n, double p);

/// Unnormalised Choi matrix C = sum_kl L(E_kl) (x) E_kl.
CMat choi(const LinearMap& map);

struct CpWitness {
  double eigenvalue;
  CVec eigenvector;
};

struct CpVerdict {
  bool cp = false;
  double min_choi_eig = 0.0;
  std::optional<CpWitness> witness;  // set iff !cp
};

/// CP iff min eig(C) >= -rel_tol * ||C||_2.
CpVerdict is_cp(const LinearMap& map, double rel_tol = 1e-10);

/// || phi(lambda rho) - lambda phi(rho) ||_2.
double homogeneity_probe(const MatrixMap& phi, const CMat& rho, double lambda);
/// || phi(a + b) - phi(a) - phi(b) ||_2.
double additivity_probe(const MatrixMap& phi, const CMat& a, const CMat& b);

}  // namespace nonlincp::cpcheck
