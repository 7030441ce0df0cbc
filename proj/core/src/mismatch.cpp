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

#include "circle_npd/mismatch.hpp"

#include <cmath>

#include "circle_npd/errors.hpp"

namespace npd {

double signed_mismatch(const PeriodicFunction& phi, const PeriodicFunction& psi, double theta,
                       double alpha) {
  return phi.eval(theta) - psi.eval(theta + alpha);
}

double eval_F(const PeriodicFunction& phi, const PeriodicFunction& psi, double theta,
              double alpha) {
  return std::fabs(signed_mismatch(phi, psi, theta, alpha));
}

GradF grad_F(const PeriodicFunction& phi, const PeriodicFunction& psi, double theta, double alpha,
             double smooth_threshold) {
  double v = signed_mismatch(phi, psi, theta, alpha);
  if (std::fabs(v) <= smooth_threshold) {
    throw NotDifferentiable("F is non-smooth where it vanishes", theta, alpha, std::fabs(v));
  }
  double sgn = v > 0.0 ? 1.0 : -1.0;
  double dpsi = psi.deriv(theta + alpha, 1);
  GradF g;
  g.d_theta = sgn * (phi.deriv(theta, 1) - dpsi);
  g.d_alpha = sgn * (-dpsi);
  return g;
}

HessianF hessian_F(const PeriodicFunction& phi, const PeriodicFunction& psi, double theta,
                   double alpha, double smooth_threshold) {
  double v = signed_mismatch(phi, psi, theta, alpha);
  if (std::fabs(v) <= smooth_threshold) {
    throw NotDifferentiable("F is non-smooth where it vanishes", theta, alpha, std::fabs(v));
  }
  double sgn = v > 0.0 ? 1.0 : -1.0;
  double ddphi = phi.deriv(theta, 2);
  double ddpsi = psi.deriv(theta + alpha, 2);
  HessianF h;
  h.m[0][0] = sgn * (ddphi - ddpsi);
  h.m[0][1] = sgn * (-ddpsi);
  h.m[1][0] = sgn * (-ddpsi);
  h.m[1][1] = sgn * (-ddpsi);
  h.det = h.m[0][0] * h.m[1][1] - h.m[0][1] * h.m[1][0];
  return h;
}

}  // namespace npd
