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

#include "circle_npd/periodic_function.hpp"

namespace npd {

struct RefineResult {
  double alpha_star = 0.0;  // canonical in [0, 2*pi)
  double g_star = 0.0;      // g(alpha_star)
};

/// Minimize g(alpha) = max_theta F near alpha0 by a 9-point pattern search:
/// evaluate g on a symmetric local grid of radius `radius`, re-center on the
/// best point, halve the radius when the best point is interior, and stop
/// once radius < tol. Derivative-free on purpose: g is a max of smooth
/// sections, with kinks exactly where maximizers trade places.
///
/// Throws NoImprovement if the iteration cap is reached while the center
/// still disagrees with the best sampled value by more than tol.
RefineResult refine_minimum(const PeriodicFunction& phi, const PeriodicFunction& psi,
                            double alpha0, double radius, double tol,
                            std::size_t n_theta = 4096);

}  // namespace npd
