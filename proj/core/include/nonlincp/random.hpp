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

// Seeded random-case generation.
//
// Algorithm (stable across platforms): std::mt19937_64 seeded with the
// 64-bit seed; each real draw is (x >> 11) * 2^-53 mapped affinely onto
// [-1, 1). Complex entries draw the real part first, then the imaginary
// part, in row-major order. No std:: distributions are used because their
// output is implementation-defined.

#pragma once

#include "nonlincp/qalg.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace nonlincp {

class CaseGenerator {
 public:
  static constexpr double kRidge = 1e-3;

  explicit CaseGenerator(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [-1, 1).
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);  // inclusive

  /// Entries with real and imaginary parts uniform in [-1, 1).
  CMat complex_matrix(int rows, int cols);
  CVec complex_vector(int n);
  /// (G + G^dagger) / 2.
  CMat hermitian(int n);
  /// G G^dagger + kRidge * 1; trace left unnormalised.
  CMat positive(int n);
  Density density(int n) { return Density(positive(n)); }
  /// Q factor of a random complex matrix with phases fixed by diag(R).
  CMat unitary(int n);
  Bipartite bipartite(int n, int m) { return Bipartite(positive(n * m), n, m); }

 private:
  std::mt19937_64 engine_;
};

/// `count` unit-trace bipartite densities (G G^dagger + ridge, then
/// divided by the trace) of shape (n, m); deterministic in `seed`.
std::vector<Bipartite> generate_random_cases(std::uint64_t seed, int count, int n, int m);

}  // namespace nonlincp
