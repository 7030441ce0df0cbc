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

#include "circle_npd/periodic_function.hpp"

namespace npd {

/// Below this |F| value the absolute value is treated as non-smooth and
/// derivative calls refuse to pick a sign.
inline constexpr double kSmoothThreshold = 1e-10;

/// Signed branch v(theta, alpha) = phi(theta) - psi(theta + alpha).
double signed_mismatch(const PeriodicFunction& phi, const PeriodicFunction& psi, double theta,
                       double alpha);

/// F(theta, alpha) = |phi(theta) - psi(theta + alpha)|.
double eval_F(const PeriodicFunction& phi, const PeriodicFunction& psi, double theta,
              double alpha);

struct GradF {
  double d_theta = 0.0;
  double d_alpha = 0.0;
};

/// Gradient of F where it is smooth: sgn(v) * (phi' - psi', -psi') with psi'
/// taken at theta + alpha. Throws NotDifferentiable if |v| <= threshold.
GradF grad_F(const PeriodicFunction& phi, const PeriodicFunction& psi, double theta, double alpha,
             double smooth_threshold = kSmoothThreshold);

struct HessianF {
  double m[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
  double det = 0.0;  // expands to -phi''(theta) * psi''(theta + alpha)
};

/// Hessian of F where it is smooth:
///   sgn(v) * [[phi'' - psi'', -psi''], [-psi'', -psi'']],
/// second derivatives of psi at theta + alpha. A near-zero determinant at a
/// certified optimum warns of accumulating optima / near-degenerate inputs.
HessianF hessian_F(const PeriodicFunction& phi, const PeriodicFunction& psi, double theta,
                   double alpha, double smooth_threshold = kSmoothThreshold);

}  // namespace npd
