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

#include "circle_npd/refine.hpp"

#include <cmath>
#include <stdexcept>

#include "circle_npd/alpha_max.hpp"
#include "circle_npd/errors.hpp"

namespace npd {

RefineResult refine_minimum(const PeriodicFunction& phi, const PeriodicFunction& psi,
                            double alpha0, double radius, double tol, std::size_t n_theta) {
  if (!(radius > 0.0) || !(tol > 0.0)) {
    throw std::invalid_argument("refine_minimum needs radius > 0 and tol > 0");
  }

  auto g = [&](double alpha) { return f_alpha_max(phi, psi, alpha, n_theta).g_value; };

  double center = alpha0;
  double g_center = g(center);
  double best_seen = g_center;

  // A re-center onto an endpoint keeps the radius (the minimizer may still be
  // outside the window); interior re-centers halve it. The endpoint budget is
  // generous: the window can travel at most pi before wrapping onto itself.
  const int max_iterations = 600;
  int iterations = 0;
  int endpoint_moves = 0;

  while (radius >= tol && iterations < max_iterations && endpoint_moves < 256) {
    ++iterations;
    int best_k = 0;
    double best_g = g_center;
    for (int k = -4; k <= 4; ++k) {
      if (k == 0) continue;
      double value = g(center + static_cast<double>(k) * radius / 4.0);
      if (value < best_g) {
        best_g = value;
        best_k = k;
      }
    }
    if (best_g < best_seen) best_seen = best_g;
    if (best_k == 0) {
      radius *= 0.5;
      continue;
    }
    center = center + static_cast<double>(best_k) * radius / 4.0;
    g_center = best_g;
    if (best_k == -4 || best_k == 4) {
      ++endpoint_moves;
    } else {
      radius *= 0.5;
    }
  }

  if (radius >= tol && g_center > best_seen + tol) {
    throw NoImprovement("local search stalled before reaching its radius target");
  }

  RefineResult result;
  result.alpha_star = Angle::wrap(center);
  result.g_star = g_center;
  return result;
}

}  // namespace npd
