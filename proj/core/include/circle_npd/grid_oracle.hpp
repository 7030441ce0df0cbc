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

#pragma once

#include <cstddef>
#include <vector>

#include "circle_npd/periodic_function.hpp"

namespace npd {

/// Rigorous enclosure of the distance, from Lipschitz bounds.
struct Bracket {
  double lower = 0.0;
  double upper = 0.0;
};

struct GridOracleResult {
  Bracket bracket;
  std::vector<double> argmin_cells;  // every alpha_j that could still hold the minimum
  double grid_min = 0.0;             // raw min_j G_j (no margins)
  double grid_argmin = 0.0;          // alpha_j attaining it
  std::vector<double> cell_values;   // G_j = max over the theta grid of F(theta, alpha_j)
};

/// Evaluate G_j = max_theta-grid F(theta, alpha_j) on an n_alpha x n_theta
/// grid. Margins make the bracket rigorous:
///
///   upper = min_j G_j + (L(phi)+L(psi))*pi/n_theta   (a grid max can miss the
///           true section max by at most half a cell times the theta-Lipschitz
///           constant of the section)
///   lower = upper - (L(phi)+L(psi))*pi/n_theta - L(psi)*pi/n_alpha
///           (g itself is L(psi)-Lipschitz in alpha)
///
/// argmin_cells keeps every alpha_j with G_j within (upper - lower) of the raw
/// minimum; a cell adjacent to any true minimizer always qualifies.
GridOracleResult grid_oracle(const PeriodicFunction& phi, const PeriodicFunction& psi,
                             std::size_t n_alpha = 4096, std::size_t n_theta = 4096);

}  // namespace npd
