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

#include "nonlincp/compose.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace nonlincp::compose {

BlockForm::BlockForm(int n, int m, std::vector<CMat> blocks)
    : n_(n), m_(m), blocks_(std::move(blocks)) {
  if (n_ <= 0 || m_ <= 0) throw LinalgError("BlockForm: dimensions must be positive");
  if (blocks_.size() != static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_)) {
    throw LinalgError("BlockForm: expected m*m blocks");
  }
  for (const CMat& b : blocks_) {
    if (b.rows() != n_ || b.cols() != n_) throw LinalgError("BlockForm: every block must be n x n");
  }
}

BlockForm BlockForm::from_matrix(const CMat& rho, int n, int m) {
  std::vector<CMat> blocks;
  blocks.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    for (int l = 0; l < m; ++l) blocks.push_back(qalg::block(rho, n, m, k, l));
  }
  return BlockForm(n, m, std::move(blocks));
}

std::size_t BlockForm::index(int k, int l) const {
  if (k < 0 || k >= m_ || l < 0 || l >= m_) throw LinalgError("BlockForm: block index out of range");
  return static_cast<std::size_t>(k) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(l);
}

CMat BlockForm::assemble() const {
  CMat out(n_ * m_, n_ * m_);
  for (int k = 0; k < m_; ++k) {
    for (int l = 0; l < m_; ++l) {
      const CMat& b = block(k, l);
      for (int s = 0; s < n_; ++s) {
        for (int sp = 0; sp < n_; ++sp) out(s * m_ + k, sp * m_ + l) = b(s, sp);
      }
    }
  }
  return out;
}

SubsystemMap identity_map() {
  return {[](const CMat& a) { return a; }, "identity", {true, true, true}};
}

SubsystemMap unitary_map(const CMat& u) {
  if (!qalg::is_unitary(u)) throw LinalgError("unitary_map: matrix is not unitary");
  return {[u](const CMat& a) { return CMat(u * a * u.adjoint()); }, "unitary", {true, true, true}};
}

SubsystemMap hartree_map(const hartree::MeanFieldFlow& flow, double t) {
  return {[flow, t](const CMat& a) { return hartree::flow_map(flow, t, a); },
          "hartree(t=" + std::to_string(t) + ")",
          {true, true, t == 0.0 ? std::optional<bool>(true) : std::optional<bool>(false)}};
}

MapFamily hartree_family(const hartree::MeanFieldFlow& flow) {
  return [flow](double t) { return hartree_map(flow, t); };
}

FourBlockExample FourBlockExample::standard() {
  const CMat one = qalg::identity(2);
  return {(one + qalg::pauli_x()) / 16.0, (one + qalg::pauli_z()) / 8.0, qalg::pauli_z()};
}

void FourBlockExample::validate() const {
  (void)Density(a);
  (void)Density(b);
  if (a.rows() != b.rows() || h.rows() != a.rows()) {
    throw LinalgError("FourBlockExample: a, b and h must share one dimension");
  }
  if (!qalg::is_hermitian(h)) throw LinalgError("FourBlockExample: h must be Hermitian");
}

BlockForm FourBlockExample::blocks() const {
  const int n = static_cast<int>(a.rows());
  const CMat ab = a + b;
  // 1 marks a+b, 0 marks a.
  constexpr int pattern[4][4] = {{0, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 0}};
  std::vector<CMat> out;
  for (const auto& row : pattern) {
    for (int cell : row) out.push_back(cell ? ab : a);
  }
  return BlockForm(n, 4, std::move(out));
}

CMat four_block_basis_change() {
  const double r = 1.0 / std::sqrt(2.0);
  CMat u = CMat::Zero(4, 4);
  u(0, 0) = 1.0;
  u(1, 1) = 1.0;
  u(2, 2) = r;
  u(2, 3) = -r;
  u(3, 2) = r;
  u(3, 3) = r;
  return u;
}

BlockForm naive_extend(const SubsystemMap& phi, const BlockForm& rho) {
  std::vector<CMat> out;
  out.reserve(static_cast<std::size_t>(rho.m()) * static_cast<std::size_t>(rho.m()));
  for (int k = 0; k < rho.m(); ++k) {
    for (int l = 0; l < rho.m(); ++l) {
      try {
        out.push_back(phi.apply(rho.block(k, l)));
      } catch (const DomainError& e) {
        throw DomainError("naive extension is ill-defined on block (" + std::to_string(k) + "," +
                          std::to_string(l) + "): " + e.what());
      }
    }
  }
  return BlockForm(rho.n(), rho.m(), std::move(out));
}

namespace {

CMat block_trace_2(const BlockForm& rho) {
  CMat out = CMat::Zero(rho.n(), rho.n());
  for (int k = 0; k < rho.m(); ++k) out += rho.block(k, k);
  return out;
}

}  // namespace

BlockForm correct_extend(const hartree::MeanFieldFlow& flow, double t, const BlockForm& rho) {
  const CMat reduced = block_trace_2(rho);
  const Complex w = hartree::frequency_of(flow, reduced);
  const qalg::HermitianGenerator gen(flow.h);
  std::vector<CMat> out;
  for (int k = 0; k < rho.m(); ++k) {
    for (int l = 0; l < rho.m(); ++l) out.push_back(gen.conjugate(rho.block(k, l), w * t));
  }
  return BlockForm(rho.n(), rho.m(), std::move(out));
}

Bipartite correct_extend(const hartree::MeanFieldFlow& flow, double t, const Bipartite& rho) {
  if (rho.dens().trace() <= 0.0) throw DomainError("correct_extend: zero trace");
  const CMat lifted = qalg::kron(flow.h, CMat::Identity(rho.m(), rho.m()));
  const Complex w = hartree::frequency_of({lifted, flow.coupling}, rho.mat());
  const CMat evolved = qalg::HermitianGenerator(lifted).conjugate(rho.mat(), w * t);
  return Bipartite(Density(evolved, rho.dens().herm_tol(), rho.dens().psd_tol()), rho.n(), rho.m());
}

CMat reduce_naive(const SubsystemMap& phi, const BlockForm& rho) {
  CMat out = CMat::Zero(rho.n(), rho.n());
  for (int k = 0; k < rho.m(); ++k) {
    try {
      out += phi.apply(rho.block(k, k));
    } catch (const DomainError& e) {
      throw DomainError("naive reduction is ill-defined on block (" + std::to_string(k) + "," +
                        std::to_string(k) + "): " + e.what());
    }
  }
  return out;
}

BlockForm passive_basis_change(const BlockForm& rho, const CMat& u) {
  if (u.rows() != rho.m() || !qalg::is_unitary(u, 1e-10)) {
    throw LinalgError("passive_basis_change: expected an m x m unitary");
  }
  const CMat u_inv = u.adjoint();
  std::vector<CMat> out;
  for (int k = 0; k < rho.m(); ++k) {
    for (int l = 0; l < rho.m(); ++l) {
      CMat acc = CMat::Zero(rho.n(), rho.n());
      for (int kp = 0; kp < rho.m(); ++kp) {
        for (int lp = 0; lp < rho.m(); ++lp) {
          const Complex c = u(k, kp) * u_inv(lp, l);
          if (c != Complex(0.0, 0.0)) acc += c * rho.block(kp, lp);
        }
      }
      out.push_back(std::move(acc));
    }
  }
  return BlockForm(rho.n(), rho.m(), std::move(out));
}

ReducedDynamics naive_rule(MapFamily family) {
  return [family = std::move(family)](const BlockForm& rho, double t) {
    return reduce_naive(family(t), rho);
  };
}

ReducedDynamics correct_rule(hartree::MeanFieldFlow flow) {
  return [flow = std::move(flow)](const BlockForm& rho, double t) {
    return block_trace_2(correct_extend(flow, t, rho));
  };
}

TimeSeries<double> consistency_check(const hartree::MeanFieldFlow& flow, const Bipartite& rho,
                                     const std::vector<double>& t_grid) {
  const Density reduced = ptrace2(rho);
  const auto one_particle = hartree::propagate(flow, reduced, t_grid);
  TimeSeries<double> out;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const Bipartite evolved = correct_extend(flow, t_grid[i], rho);
    const CMat lhs = qalg::partial_trace_2(evolved.mat(), rho.n(), rho.m());
    out.push(t_grid[i], qalg::norm_op2(lhs - one_particle.values[i].mat()));
  }
  return out;
}

TimeSeries<CMat> consistency_residual(const ReducedDynamics& rule,
                                      const hartree::MeanFieldFlow& flow, const BlockForm& rho,
                                      const std::vector<double>& t_grid) {
  const Density reduced(block_trace_2(rho));
  const auto one_particle = hartree::propagate(flow, reduced, t_grid);
  TimeSeries<CMat> out;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    out.push(t_grid[i], rule(rho, t_grid[i]) - one_particle.values[i].mat());
  }
  return out;
}

TimeSeries<GapSample> signaling_gap(const ReducedDynamics& rule, const BlockForm& rho,
                                    const CMat& u, const std::vector<double>& t_grid) {
  const BlockForm rotated = passive_basis_change(rho, u);
  TimeSeries<GapSample> out;
  for (double t : t_grid) {
    CMat delta = rule(rho, t) - rule(rotated, t);
    const double norm = qalg::norm_op2(delta);
    out.push(t, GapSample{std::move(delta), norm});
  }
  return out;
}

CMat mixture_sum(const Decomposition& d) {
  if (d.empty()) throw LinalgError("mixture: empty decomposition");
  CMat out = CMat::Zero(d.front().second.dim(), d.front().second.dim());
  for (const auto& [p, rho] : d) {
    if (p < 0.0) throw LinalgError("mixture: negative weight");
    if (rho.dim() != out.rows()) throw LinalgError("mixture: dimension mismatch");
    out += p * rho.mat();
  }
  return out;
}

CMat mixture_image(const SubsystemMap& phi, const Decomposition& d) {
  if (d.empty()) throw LinalgError("mixture: empty decomposition");
  CMat out = CMat::Zero(d.front().second.dim(), d.front().second.dim());
  for (const auto& [p, rho] : d) out += p * phi.apply(rho.mat());
  return out;
}

double mixture_decomposition_gap(const SubsystemMap& phi, const Decomposition& first,
                                 const Decomposition& second) {
  const CMat lhs = mixture_sum(first);
  const CMat rhs = mixture_sum(second);
  if (lhs.rows() != rhs.rows() || qalg::norm_max(lhs - rhs) > 1e-12 * (1.0 + qalg::norm_max(lhs))) {
    throw LinalgError("mixture_decomposition_gap: decompositions describe different matrices");
  }
  return qalg::norm_op2(mixture_image(phi, first) - mixture_image(phi, second));
}

Decomposition eigen_decomposition(const Density& rho) {
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (rho.mat() + rho.mat().adjoint()));
  Decomposition out;
  for (int j = 0; j < rho.dim(); ++j) {
    const CVec v = es.eigenvectors().col(j);
    out.emplace_back(std::max(0.0, es.eigenvalues()(j)), Density(v * v.adjoint()));
  }
  return out;
}

}  // namespace nonlincp::compose
