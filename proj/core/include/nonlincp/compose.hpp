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

// Extending a subsystem dynamics to a composite system.
//
// A bipartite rho = sum_kl a_kl (x) |k><l| is viewed as an m x m array of
// operator-valued blocks a_kl. Two extension rules are provided:
//
//  * naive: every block evolves on its own, a_kl -> phi(a_kl). For a
//    nonlinear phi the result depends on the basis chosen in factor 2.
//  * correct: the Lie-Poisson flow, which conjugates every block with the
//    same unitary U_t(Tr_2 rho). Its reduction commutes with Tr_2.

#pragma once

#include "nonlincp/hartree.hpp"
#include "nonlincp/qalg.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nonlincp::compose {

/// m x m array of n x n blocks; blocks(k, l) = a_kl.
class BlockForm {
 public:
  BlockForm(int n, int m, std::vector<CMat> blocks);

  static BlockForm from_matrix(const CMat& rho, int n, int m);
  static BlockForm from_bipartite(const Bipartite& rho) {
    return from_matrix(rho.mat(), rho.n(), rho.m());
  }

  int n() const { return n_; }
  int m() const { return m_; }
  const CMat& block(int k, int l) const { return blocks_[index(k, l)]; }

  /// sum_kl a_kl (x) |k><l| in the factor-1-major convention.
  CMat assemble() const;
  Bipartite to_bipartite() const { return Bipartite(assemble(), n_, m_); }

 private:
  std::size_t index(int k, int l) const;

  int n_;
  int m_;
  std::vector<CMat> blocks_;
};

struct MapProperties {
  bool homogeneous_1 = false;
  bool positive = false;
  std::optional<bool> linear;
};

/// A deterministic map on n x n operators, e.g. the one-particle flow phi^t.
struct SubsystemMap {
  MatrixMap apply;
  std::string label;
  MapProperties properties;
};

/// One SubsystemMap per time.
using MapFamily = std::function<SubsystemMap(double t)>;

SubsystemMap identity_map();
SubsystemMap unitary_map(const CMat& u);
/// Closed-form mean-field flow at fixed t; throws DomainError on traceless
/// nonzero inputs.
SubsystemMap hartree_map(const hartree::MeanFieldFlow& flow, double t);
MapFamily hartree_family(const hartree::MeanFieldFlow& flow);

/// The four-block state built from positive n x n matrices a, b:
///
///   [ a   a    a    a ]
///   [ a  a+b  a+b   a ]
///   [ a  a+b  a+b   a ]
///   [ a   a    a    a ]
///
/// together with a generator h. Defaults: h = sigma_z,
/// a = (1 + sigma_x)/16, b = (1 + sigma_z)/8.
struct FourBlockExample {
  CMat a;
  CMat b;
  CMat h;

  static FourBlockExample standard();
  /// Throws LinalgError unless a and b are positive and h Hermitian.
  void validate() const;
  BlockForm blocks() const;
  Bipartite state() const { return blocks().to_bipartite(); }
  hartree::MeanFieldFlow flow() const { return {h, 2.0}; }
};

/// 4x4 change of basis: identity on the first two vectors, rotation by
/// pi/4 mixing the last two.
CMat four_block_basis_change();

/// Entry-wise image phi(a_kl). Domain errors of phi propagate.
BlockForm naive_extend(const SubsystemMap& phi, const BlockForm& rho);

/// Conjugation by U_t(Tr_2 rho) (x) 1_m.
Bipartite correct_extend(const hartree::MeanFieldFlow& flow, double t, const Bipartite& rho);
/// Block view of correct_extend: a_kl -> U a_kl U^-1 with one shared U.
BlockForm correct_extend(const hartree::MeanFieldFlow& flow, double t, const BlockForm& rho);

/// sum_k phi(a_kk).
CMat reduce_naive(const SubsystemMap& phi, const BlockForm& rho);

/// Passive re-coordinatisation by a unitary on factor 2:
/// a~_kl = sum U_kk' a_k'l' (U^-1)_l'l, i.e. (1 (x) U) rho (1 (x) U)^dagger.
BlockForm passive_basis_change(const BlockForm& rho, const CMat& u);

/// Reduced state of factor 1 at time t produced by an extension rule.
using ReducedDynamics = std::function<CMat(const BlockForm&, double)>;

ReducedDynamics naive_rule(MapFamily family);
ReducedDynamics correct_rule(hartree::MeanFieldFlow flow);

/// || Tr_2 phi_{1+2}^t(rho) - phi_1^t(Tr_2 rho) ||_2 per time, using the
/// Lie-Poisson extension on the left and the one-particle flow on the right.
TimeSeries<double> consistency_check(const hartree::MeanFieldFlow& flow, const Bipartite& rho,
                                     const std::vector<double>& t_grid);

/// Same residual for an arbitrary rule, as matrices.
TimeSeries<CMat> consistency_residual(const ReducedDynamics& rule,
                                      const hartree::MeanFieldFlow& flow, const BlockForm& rho,
                                      const std::vector<double>& t_grid);

struct GapSample {
  CMat delta;
  double norm = 0.0;  // operator 2-norm of delta
};

/// delta(t) = rule(rho, t) - rule(passive_basis_change(rho, u), t).
TimeSeries<GapSample> signaling_gap(const ReducedDynamics& rule, const BlockForm& rho,
                                    const CMat& u, const std::vector<double>& t_grid);

/// Convex decomposition sum_k p_k rho_k.
using Decomposition = std::vector<std::pair<double, Density>>;

CMat mixture_sum(const Decomposition& d);
CMat mixture_image(const SubsystemMap& phi, const Decomposition& d);

/// || sum p phi(rho) - sum p~ phi(rho~) ||_2. Throws LinalgError if the two
/// decompositions do not describe the same matrix to 1e-12.
double mixture_decomposition_gap(const SubsystemMap& phi, const Decomposition& first,
                                 const Decomposition& second);

/// Spectral decomposition with weights p_k = eigenvalues (zero weights kept).
Decomposition eigen_decomposition(const Density& rho);

}  // namespace nonlincp::compose
