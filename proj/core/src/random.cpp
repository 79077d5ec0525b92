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

#include "nonlincp/random.hpp"

#include <Eigen/QR>

#include <cmath>
#include <stdexcept>

namespace nonlincp {

double CaseGenerator::uniform() {
  const std::uint64_t bits = engine_() >> 11;
  return 2.0 * (static_cast<double>(bits) * 0x1.0p-53) - 1.0;
}

double CaseGenerator::uniform(double lo, double hi) {
  return lo + (hi - lo) * 0.5 * (uniform() + 1.0);
}

int CaseGenerator::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

CMat CaseGenerator::complex_matrix(int rows, int cols) {
  CMat g(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const double re = uniform();
      const double im = uniform();
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

CVec CaseGenerator::complex_vector(int n) { return complex_matrix(n, 1).col(0); }

CMat CaseGenerator::hermitian(int n) {
  const CMat g = complex_matrix(n, n);
  return 0.5 * (g + g.adjoint());
}

CMat CaseGenerator::positive(int n) {
  const CMat g = complex_matrix(n, n);
  return g * g.adjoint() + kRidge * CMat::Identity(n, n);
}

CMat CaseGenerator::unitary(int n) {
  const CMat g = complex_matrix(n, n);
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ() * CMat::Identity(n, n);
  const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

std::vector<Bipartite> generate_random_cases(std::uint64_t seed, int count, int n, int m) {
  if (count < 0) throw std::invalid_argument("generate_random_cases: count must be >= 0");
  if (n < 1 || m < 1 || n > 8 || m > 8) {
    throw std::invalid_argument("generate_random_cases: factor dimensions must lie in [1, 8]");
  }
  CaseGenerator gen(seed);
  std::vector<Bipartite> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const CMat p = gen.positive(n * m);
    out.emplace_back(CMat(p / p.trace().real()), n, m);
  }
  return out;
}

}  // namespace nonlincp
