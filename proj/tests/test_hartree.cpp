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

#include "nonlincp/hartree.hpp"
#include "nonlincp/poisson.hpp"
#include "nonlincp/random.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numbers>

namespace nonlincp::hartree {
namespace {

using testing::max_abs;

const CMat kOne = qalg::identity(2);
const CMat kA = (kOne + qalg::pauli_x()) / 16.0;
const CMat kB = (kOne + qalg::pauli_z()) / 8.0;

TEST(Frequency, FourBlockSubsystem) {
  const MeanFieldFlow flow{qalg::pauli_z(), 2.0};
  EXPECT_NEAR(frequency(flow, Density(CMat(4.0 * kA + 2.0 * kB))), 1.0, 1e-15);
  EXPECT_NEAR(frequency(flow, Density(CMat(2.0 * kA + kB))), 1.0, 1e-15);
}

TEST(Frequency, ZeroHomogeneous) {
  CaseGenerator gen(51);
  for (int trial = 0; trial < 10; ++trial) {
    const MeanFieldFlow flow{gen.hermitian(3), 1.5};
    const Density rho = gen.density(3);
    EXPECT_NEAR(frequency(flow, rho.scaled(7.3)), frequency(flow, rho), 1e-13);
  }
}

TEST(Frequency, ZeroMeanFreezesFlow) {
  const MeanFieldFlow flow{qalg::pauli_z(), 2.0};
  const Density rho(CMat(kOne / 2.0 + 0.3 * qalg::pauli_x()));
  EXPECT_EQ(frequency(flow, rho), 0.0);
  for (const Density& r : propagate(flow, rho, linspace(0.0, 5.0, 6)).values) {
    EXPECT_MAT_NEAR(r.mat(), rho.mat(), 1e-15);
  }
}

TEST(FrequencyOf, ZeroMatrixAndTracelessInput) {
  const MeanFieldFlow flow{qalg::pauli_z(), 2.0};
  EXPECT_EQ(frequency_of(flow, CMat::Zero(2, 2)), Complex(0.0, 0.0));
  EXPECT_THROW(frequency_of(flow, qalg::pauli_x()), DomainError);
  EXPECT_MAT_NEAR(flow_map(flow, 1.0, CMat::Zero(2, 2)), CMat::Zero(2, 2), 0.0);
}

TEST(FrequencyOf, ComplexForGeneralBlocks) {
  const MeanFieldFlow flow{qalg::pauli_z(), 1.0};
  CMat a(2, 2);
  a << 1.0, 0.0, 0.0, Complex(0.0, 1.0);
  // Tr(h a) / Tr a = (1 - i) / (1 + i) = -i.
  EXPECT_LE(std::abs(frequency_of(flow, a) - Complex(0.0, -1.0)), 1e-15);
}

TEST(Propagate, CommutingStateIsStationary) {
  CaseGenerator gen(52);
  const MeanFieldFlow flow{qalg::pauli_z(), 2.0};
  const Density rho(CMat(0.7 * kOne + 0.2 * qalg::pauli_z()));
  for (const auto& spec : {FlowSpec{}, FlowSpec{Rk4{1e-2}}}) {
    for (const Density& r : propagate(flow, rho, linspace(0.0, 3.0, 7), spec).values) {
      EXPECT_MAT_NEAR(r.mat(), rho.mat(), 1e-14);
    }
  }
}

TEST(Propagate, FourBlockSubsystemComponents) {
  const MeanFieldFlow flow{qalg::pauli_z(), 2.0};
  const auto grid = linspace(0.0, 2.0 * std::numbers::pi, 41);
  const auto traj = propagate(flow, Density(CMat(4.0 * kA + 2.0 * kB)), grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    const CMat expected = 0.5 * kOne + 0.25 * (std::cos(2 * t) * qalg::pauli_x() + std::sin(2 * t) * qalg::pauli_y()) +
                          0.25 * qalg::pauli_z();
    EXPECT_MAT_NEAR(traj.values[i].mat(), expected, 1e-14);
    // Same as conjugation with the generator frozen at 2a + b.
    const CMat u = qalg::herm_exp(qalg::pauli_z(), frequency(flow, Density(CMat(2.0 * kA + kB))) * t);
    EXPECT_MAT_NEAR(traj.values[i].mat(), CMat(u * (4.0 * kA + 2.0 * kB) * u.adjoint()), 1e-14);
  }
}

TEST(Propagate, Rk4AgreesWithClosedForm) {
  CaseGenerator gen(53);
  const auto grid = linspace(0.0, 10.0, 21);
  for (int trial = 0; trial < 20; ++trial) {
    const MeanFieldFlow flow{gen.hermitian(3), 2.0};
    const Density rho = gen.density(3);
    const auto exact = propagate(flow, rho, grid);
    const auto numeric = propagate(flow, rho, grid, {Rk4{1e-3}});
    ASSERT_EQ(numeric.size(), grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      EXPECT_LE(max_abs(exact.values[i].mat() - numeric.values[i].mat()), 1e-8);
    }
  }
}

TEST(Propagate, SpectrumPositivityAndEnergyAreConserved) {
  CaseGenerator gen(54);
  for (int trial = 0; trial < 10; ++trial) {
    const MeanFieldFlow flow{gen.hermitian(4), 2.0};
    const Density rho = gen.density(4);
    const RVec ev0 = qalg::eigvals_herm(rho.mat());
    const auto energy = poisson::HamFn::hartree_square(flow.h);
    const double e0 = poisson::evaluate(energy, rho);
    for (const Density& r : propagate(flow, rho, linspace(0.0, 10.0, 11)).values) {
      EXPECT_LE((qalg::eigvals_herm(r.mat()) - ev0).cwiseAbs().maxCoeff(), 1e-10);
      EXPECT_GE(qalg::min_eig_herm(r.mat()), -1e-10);
    }
    for (const Density& r : propagate(flow, rho, linspace(0.0, 5.0, 11), {Rk4{1e-3}}).values) {
      EXPECT_NEAR(poisson::evaluate(energy, r), e0, 1e-9);
      EXPECT_GE(qalg::min_eig_herm(r.mat()), -1e-10);
    }
  }
}

TEST(Propagate, ClosedFormDerivativeMatchesEquationOfMotion) {
  CaseGenerator gen(55);
  for (int trial = 0; trial < 10; ++trial) {
    const MeanFieldFlow flow{gen.hermitian(3), 2.0};
    const Density rho = gen.density(3);
    const double t = gen.uniform(0.0, 5.0), dt = 1e-5;
    const auto traj = propagate(flow, rho, {0.0, t - dt, t, t + dt});
    const CMat fd = (traj.values[3].mat() - traj.values[1].mat()) / (2.0 * dt);
    const CMat eom = poisson::eom_rhs(poisson::HamFn::hartree_square(flow.h), traj.values[2].mat());
    EXPECT_LE(max_abs(fd - eom), 1e-6);
    EXPECT_LE(max_abs(rhs(flow, traj.values[2].mat()) - eom), 1e-12);
  }
}

TEST(Propagate, RejectsBadGridsAndGenerators) {
  const MeanFieldFlow flow{qalg::pauli_z(), 2.0};
  const Density rho(kOne);
  EXPECT_THROW(propagate(flow, rho, {}), std::invalid_argument);
  EXPECT_THROW(propagate(flow, rho, {0.5, 1.0}), std::invalid_argument);
  EXPECT_THROW(propagate(flow, rho, {0.0, 1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(propagate({qalg::identity(3), 1.0}, rho, {0.0}), LinalgError);
  CMat bad = qalg::pauli_x();
  bad(0, 1) = 2.0;
  EXPECT_THROW(propagate({bad, 1.0}, rho, {0.0}), LinalgError);
  EXPECT_THROW(rhs(flow, qalg::pauli_x()), DomainError);
}

TEST(Propagate, Rk4RejectsHermiticityDrift) {
  const MeanFieldFlow flow{qalg::pauli_z(), 2.0};
  const Density rho(CMat(4.0 * kA + 2.0 * kB));
  FlowSpec spec{Rk4{1e-2}};
  spec.herm_drift_tol = -1.0;
  EXPECT_THROW(propagate(flow, rho, {0.0, 1.0}, spec), std::runtime_error);
}

TEST(Composite, ProductStateEvolvesFactorOneOnly) {
  CaseGenerator gen(56);
  const MeanFieldFlow flow{gen.hermitian(2), 2.0};
  const Density r1 = gen.density(2), r2 = gen.density(3);
  const auto grid = linspace(0.0, 4.0, 9);
  const auto joint = propagate_composite(flow, product_state(r1, r2), grid);
  // Tr2 of a product carries the factor Tr r2, which the frequency ignores.
  const auto single = propagate(flow, r1, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_MAT_NEAR(joint.values[i].mat(), qalg::kron(single.values[i].mat(), r2.mat()), 1e-13);
  }
}

TEST(Composite, TraceAndSpectrumConstantRk4AndClosedFormAgree) {
  CaseGenerator gen(57);
  const MeanFieldFlow flow{gen.hermitian(2), 2.0};
  const Bipartite rho = gen.bipartite(2, 3);
  const auto grid = linspace(0.0, 3.0, 7);
  const auto exact = propagate_composite(flow, rho, grid);
  const auto numeric = propagate_composite(flow, rho, grid, {Rk4{1e-3}});
  const RVec ev0 = qalg::eigvals_herm(rho.mat());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_NEAR(exact.values[i].dens().trace(), rho.dens().trace(), 1e-12);
    EXPECT_LE((qalg::eigvals_herm(exact.values[i].mat()) - ev0).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LE(max_abs(exact.values[i].mat() - numeric.values[i].mat()), 1e-8);
  }
}

TEST(MeanField, OneHomogeneous) {
  CaseGenerator gen(58);
  for (int trial = 0; trial < 10; ++trial) {
    const CMat q = gen.hermitian(3);
    const Density rho = gen.density(3);
    for (double lambda : {0.1, 1.0, 7.3}) {
      const CMat lhs = solve_mean_field(q, rho.scaled(lambda), 1.3).mat();
      const CMat rhs_ = lambda * solve_mean_field(q, rho, 1.3).mat();
      EXPECT_LE(max_abs(lhs - rhs_), 1e-12 * (1.0 + lambda));
    }
  }
}

TEST(MeanField, IdentityGeneratorIsTrivial) {
  CaseGenerator gen(59);
  const Density rho = gen.density(3);
  EXPECT_MAT_NEAR(solve_mean_field(qalg::identity(3), rho, 2.0).mat(), rho.mat(), 1e-13);
}

TEST(MeanField, NotAdditive) {
  const Density ra(CMat((kOne + qalg::pauli_x()) / 4.0)), rb(CMat((kOne + qalg::pauli_z()) / 4.0));
  const CMat lhs = solve_mean_field(qalg::pauli_z(), Density(CMat(ra.mat() + rb.mat())), 1.0).mat();
  const CMat sum = solve_mean_field(qalg::pauli_z(), ra, 1.0).mat() + solve_mean_field(qalg::pauli_z(), rb, 1.0).mat();
  EXPECT_GT(qalg::norm_op2(lhs - sum), 0.01);
}

TEST(MeanField, MatchesCouplingOnePropagation) {
  CaseGenerator gen(60);
  const CMat q = gen.hermitian(2);
  const Density rho = gen.density(2);
  const auto traj = propagate({q, 1.0}, rho, {0.0, 2.5});
  EXPECT_MAT_NEAR(solve_mean_field(q, rho, 2.5).mat(), traj.values[1].mat(), 1e-14);
}

}  // namespace
}  // namespace nonlincp::hartree
