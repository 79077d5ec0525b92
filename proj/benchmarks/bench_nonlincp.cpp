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
#include "nonlincp/cpcheck.hpp"
#include "nonlincp/random.hpp"
#include "nonlincp/weinberg.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

namespace {

using namespace nonlincp;

void BM_HermExp(benchmark::State& state) {
  CaseGenerator gen(1);
  const CMat h = gen.hermitian(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qalg::herm_exp(h, 0.7));
}
BENCHMARK(BM_HermExp)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_FourBlockGap(benchmark::State& state) {
  const auto ex = compose::FourBlockExample::standard();
  const auto rule = compose::naive_rule(compose::hartree_family(ex.flow()));
  const auto grid = linspace(0.0, 3.0 * std::numbers::pi, 501);
  for (auto _ : state)
    benchmark::DoNotOptimize(compose::signaling_gap(rule, ex.blocks(), compose::four_block_basis_change(), grid));
}
BENCHMARK(BM_FourBlockGap)->Unit(benchmark::kMillisecond);

void BM_Consistency(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  CaseGenerator gen(2);
  const hartree::MeanFieldFlow flow{gen.hermitian(d), 2.0};
  const Bipartite rho = generate_random_cases(3, 1, d, d).front();
  const auto grid = linspace(0.0, 10.0, 101);
  for (auto _ : state) benchmark::DoNotOptimize(compose::consistency_check(flow, rho, grid));
}
BENCHMARK(BM_Consistency)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_IsCp(benchmark::State& state) {
  CaseGenerator gen(4);
  const auto map = cpcheck::unitary_conjugation(gen.unitary(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(cpcheck::is_cp(map));
}
BENCHMARK(BM_IsCp)->Arg(2)->Arg(4)->Arg(6);

void BM_WeinbergEvolve(benchmark::State& state) {
  weinberg::WeinbergParams p;
  p.alpha = std::cos(std::numbers::pi / 8);
  p.beta = std::sin(std::numbers::pi / 8);
  const auto grid = linspace(0.0, 5.0, 501);
  const auto psi0 = weinberg::singlet_closed_form(p, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(weinberg::evolve(p, psi0, grid, 1e-3));
}
BENCHMARK(BM_WeinbergEvolve)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
