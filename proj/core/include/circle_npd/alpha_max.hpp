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

/// One section of the mismatch surface: g(alpha) = max_theta |phi - psi.rho_alpha|.
struct AlphaMaxResult {
  double alpha = 0.0;               // canonical rotation this section was taken at
  double g_value = 0.0;             // max_theta F(theta, alpha)
  std::vector<double> argmax_set;   // all theta attaining the max (within value tol)
  std::vector<double> residuals;    // |d/dtheta F| at each argmax member with F != 0
  bool flat = false;                // F identically ~0: every theta is a maximizer
};

/// Dense scan of |v(theta)| = |phi(theta) - psi(theta + alpha)| on n_theta
/// points; every local-max lobe is sharpened by bisecting v' to a root and one
/// Newton polish. argmax_set keeps maximizers within argmax_value_tol of the
/// global max, clustered so members are pairwise farther than cluster_tol.
///
/// Near-zero maxima are handled on the signed branch: lobes of v and of -v are
/// refined separately, so the kink of |.| at v = 0 is never differentiated.
AlphaMaxResult f_alpha_max(const PeriodicFunction& phi, const PeriodicFunction& psi, double alpha,
                           std::size_t n_theta = 4096, double cluster_tol = 1e-7,
                           double argmax_value_tol = 1e-12);

}  // namespace npd
