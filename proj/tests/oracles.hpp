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

// Brute-force reference implementations used as independent oracles.

#pragma once

#include "nonlincp/qalg.hpp"

#include <cmath>
#include <gtest/gtest.h>

namespace nonlincp::testing {

inline CMat kron_loops(const CMat& a, const CMat& b) {
  CMat out = CMat::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// Full-index partial traces on rho[(s,k),(s',l)] = rho(s*m+k, s'*m+l).
inline CMat ptrace2_loops(const CMat& rho, int n, int m) {
  CMat out = CMat::Zero(n, n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int k = 0; k < m; ++k) out(s, t) += rho(s * m + k, t * m + k);
  return out;
}

inline CMat ptrace1_loops(const CMat& rho, int n, int m) {
  CMat out = CMat::Zero(m, m);
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l)
      for (int s = 0; s < n; ++s) out(k, l) += rho(s * m + k, s * m + l);
  return out;
}

// Index-form bracket sum_{k k' l l'} delta_{k l'} dA/drho_{kk'} rho_{lk'} dB/drho_{ll'} - (A <-> B),
// with dA/drho_{kk'} = DA(k', k).
inline Complex bracket_index_form(const CMat& da, const CMat& db, const CMat& rho) {
  const Eigen::Index d = rho.rows();
  Complex sum = 0.0;
  for (Eigen::Index k = 0; k < d; ++k)
    for (Eigen::Index kp = 0; kp < d; ++kp)
      for (Eigen::Index l = 0; l < d; ++l)
        for (Eigen::Index lp = 0; lp < d; ++lp) {
          if (k != lp) continue;
          sum += da(kp, k) * rho(l, kp) * db(lp, l) - db(kp, k) * rho(l, kp) * da(lp, l);
        }
  return sum;
}

inline double max_abs(const CMat& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

}  // namespace nonlincp::testing

#define EXPECT_MAT_NEAR(a, b, tol) EXPECT_LE(::nonlincp::testing::max_abs((a) - (b)), (tol))
