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

// Fixed-step classical Runge-Kutta on a sampling grid.

#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace nonlincp::integrate {

template <class State, class Rhs>
State rk4_step(const Rhs& rhs, const State& y, double h) {
  const State k1 = rhs(y);
  const State k2 = rhs(State(y + (0.5 * h) * k1));
  const State k3 = rhs(State(y + (0.5 * h) * k2));
  const State k4 = rhs(State(y + h * k3));
  return State(y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

/// Integrates y' = rhs(y) from grid[0] and calls sample(t, y) at every grid
/// point, including grid[0]. Each interval is split into ceil(dt / max_step)
/// equal steps so samples land exactly on the grid. `after_step(y)` runs
/// after every step and may project or reject (by throwing).
template <class State, class Rhs, class Sample, class AfterStep>
void rk4_on_grid(const Rhs& rhs, State y, const std::vector<double>& grid, double max_step,
                 const Sample& sample, const AfterStep& after_step) {
  if (!(max_step > 0.0)) throw std::invalid_argument("rk4: step must be > 0");
  if (grid.empty()) return;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw std::invalid_argument("rk4: time grid must be strictly increasing");
  }
  sample(grid.front(), y);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double span = grid[i] - grid[i - 1];
    const auto steps = static_cast<long>(std::max(1.0, std::ceil(span / max_step - 1e-9)));
    const double h = span / static_cast<double>(steps);
    for (long s = 0; s < steps; ++s) {
      y = rk4_step(rhs, y, h);
      after_step(y);
    }
    sample(grid[i], y);
  }
}

}  // namespace nonlincp::integrate
