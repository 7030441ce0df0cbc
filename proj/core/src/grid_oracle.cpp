// Copyright 2026 The circle-npd Authors
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

#include "circle_npd/grid_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "circle_npd/parallel.hpp"

namespace npd {

GridOracleResult grid_oracle(const PeriodicFunction& phi, const PeriodicFunction& psi,
                             std::size_t n_alpha, std::size_t n_theta) {
  if (n_alpha < 64 || n_theta < 64) throw std::invalid_argument("grid_oracle needs grids >= 64");

  const double h_theta = kTau / static_cast<double>(n_theta);
  const double h_alpha = kTau / static_cast<double>(n_alpha);

  std::vector<double> phi_row(n_theta);
  phi.eval_grid(0.0, h_theta, n_theta, 0, phi_row.data());

  GridOracleResult result;
  result.cell_values.assign(n_alpha, 0.0);

  // Each row is a pure function of (alpha_j); disjoint writes keep the output
  // independent of the partition.
  parallel_for(n_alpha, [&](std::size_t begin, std::size_t end) {
    std::vector<double> psi_row(n_theta);
    for (std::size_t j = begin; j < end; ++j) {
      const double alpha = static_cast<double>(j) * h_alpha;
      psi.eval_grid(alpha, h_theta, n_theta, 0, psi_row.data());
      double row_max = 0.0;
      for (std::size_t i = 0; i < n_theta; ++i) {
        double m = std::fabs(phi_row[i] - psi_row[i]);
        if (m > row_max) row_max = m;
      }
      result.cell_values[j] = row_max;
    }
  });

  double raw_min = result.cell_values[0];
  std::size_t raw_arg = 0;
  for (std::size_t j = 1; j < n_alpha; ++j) {
    if (result.cell_values[j] < raw_min) {
      raw_min = result.cell_values[j];
      raw_arg = j;
    }
  }
  result.grid_min = raw_min;
  result.grid_argmin = static_cast<double>(raw_arg) * h_alpha;

  const double theta_margin =
      (phi.lipschitz_bound() + psi.lipschitz_bound()) * std::numbers::pi / static_cast<double>(n_theta);
  const double alpha_margin =
      psi.lipschitz_bound() * std::numbers::pi / static_cast<double>(n_alpha);

  result.bracket.upper = raw_min + theta_margin;
  result.bracket.lower = result.bracket.upper - theta_margin - alpha_margin;
  if (result.bracket.lower < 0.0) result.bracket.lower = 0.0;  // F >= 0 always

  // Keep margin uses the unclamped width: a cell adjacent to a true minimizer
  // satisfies G_j <= d + alpha_margin <= raw_min + theta_margin + alpha_margin.
  const double keep = raw_min + theta_margin + alpha_margin;
  for (std::size_t j = 0; j < n_alpha; ++j) {
    if (result.cell_values[j] <= keep)
      result.argmin_cells.push_back(static_cast<double>(j) * h_alpha);
  }
  return result;
}

}  // namespace npd
