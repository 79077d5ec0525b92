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

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstring>
#include <random>

namespace nonlincp {
namespace {

TEST(CaseGenerator, FollowsDocumentedAlgorithm) {
  std::mt19937_64 reference(42);
  CaseGenerator gen(42);
  for (int i = 0; i < 100; ++i) {
    const double expected = 2.0 * std::ldexp(static_cast<double>(reference() >> 11), -53) - 1.0;
    EXPECT_EQ(gen.uniform(), expected);
  }
}

TEST(CaseGenerator, UniformRange) {
  CaseGenerator gen(1);
  for (int i = 0; i < 10000; ++i) {
    const double x = gen.uniform();
    EXPECT_GE(x, -1.0);
    EXPECT_LT(x, 1.0);
    const int k = gen.uniform_int(2, 4);
    EXPECT_GE(k, 2);
    EXPECT_LE(k, 4);
  }
}

TEST(CaseGenerator, EntriesDrawRealThenImaginaryRowMajor) {
  CaseGenerator a(5), b(5);
  const CMat m = a.complex_matrix(2, 3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) {
      const double re = b.uniform();
      const double im = b.uniform();
      EXPECT_EQ(m(i, j), Complex(re, im));
    }
}

TEST(CaseGenerator, ProducesValidObjects) {
  CaseGenerator gen(6);
  for (int n = 1; n <= 5; ++n) {
    EXPECT_TRUE(qalg::is_hermitian(gen.hermitian(n), 0.0));
    EXPECT_TRUE(qalg::is_unitary(gen.unitary(n), 1e-13));
    EXPECT_GE(qalg::min_eig_herm(gen.positive(n)), CaseGenerator::kRidge * (1.0 - 1e-9));
  }
}

TEST(RandomCases, SameSeedIsBitIdentical) {
  const auto a = generate_random_cases(99, 5, 3, 2);
  const auto b = generate_random_cases(99, 5, 3, 2);
  ASSERT_EQ(a.size(), 5u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(std::memcmp(a[i].mat().data(), b[i].mat().data(), sizeof(Complex) * 36), 0);
  }
  const auto c = generate_random_cases(100, 1, 3, 2);
  EXPECT_GT(testing::max_abs(a[0].mat() - c[0].mat()), 0.0);
}

TEST(RandomCases, EmptyAndBounds) {
  EXPECT_TRUE(generate_random_cases(1, 0, 2, 2).empty());
  EXPECT_THROW(generate_random_cases(1, 1, 9, 2), std::invalid_argument);
  EXPECT_THROW(generate_random_cases(1, 1, 2, 0), std::invalid_argument);
  EXPECT_THROW(generate_random_cases(1, -1, 2, 2), std::invalid_argument);
}

TEST(RandomCases, OutputsSatisfyDensityInvariants) {
  const auto cases = generate_random_cases(7, 50, 4, 4);
  for (const auto& b : cases) {
    EXPECT_NEAR(b.dens().trace(), 1.0, 1e-14);
    EXPECT_LE(qalg::hermiticity_defect(b.mat()), 1e-15);
    EXPECT_GT(qalg::min_eig_herm(b.mat()), 0.0);
    EXPECT_NO_THROW(Density{b.mat()});
  }
}

}  // namespace
}  // namespace nonlincp
