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

#include "circle_npd/certify.hpp"

#include <algorithm>
#include <cmath>

#include "circle_npd/alpha_max.hpp"
#include "circle_npd/critical_points.hpp"
#include "circle_npd/errors.hpp"
#include "circle_npd/mismatch.hpp"

namespace npd {
namespace {

constexpr double kZeroDistanceThreshold = 1e-9;

OptimalityCertificate certify_zero(const PeriodicFunction& phi, const PeriodicFunction& psi,
                                   double alpha) {
  OptimalityCertificate cert;
  cert.alpha = Angle::wrap(alpha);

  const auto cps_phi = critical_points(phi);
  const auto cps_psi = critical_points(psi);

  ZeroDistanceCondition cond;
  bool all_matched = cps_phi.size() == cps_psi.size();
  for (const CriticalPoint& cp : cps_phi) {
    const double expect = Angle::wrap(cp.theta + alpha);
    const CriticalPoint* hit = nullptr;
    for (const CriticalPoint& cq : cps_psi) {
      if (cq.kind == cp.kind && circular_distance(cq.theta, expect) <= 1e-5 &&
          std::fabs(cq.value - cp.value) <= 1e-7) {
        hit = &cq;
        break;
      }
    }
    if (!hit) {
      all_matched = false;
      break;
    }
    cond.pairs.push_back({cp.theta, hit->theta, cp.value});
  }

  if (all_matched) {
    cert.condition = std::move(cond);
  } else {
    UncertifiedCondition un;
    un.reason = "zero distance claimed but critical points fail to match under the rotation";
    cert.condition = std::move(un);
  }
  return cert;
}

}  // namespace

OptimalityCertificate certify(const PeriodicFunction& phi, const PeriodicFunction& psi,
                              double alpha, double claimed_d, double tol, std::size_t n_theta) {
  // Recollect maximizers at a loose value tolerance: alpha itself is only
  // known to refinement accuracy, which perturbs near-tied maximizers more
  // than the strict argmax tolerance would admit.
  const double loose = 1e-7 * std::max(1.0, claimed_d);
  AlphaMaxResult section = f_alpha_max(phi, psi, alpha, n_theta, 1e-7, loose);

  if (std::fabs(claimed_d - section.g_value) > tol) {
    throw ValueMismatch("claimed distance disagrees with the recomputed section max", claimed_d,
                        section.g_value);
  }

  if (claimed_d < kZeroDistanceThreshold) return certify_zero(phi, psi, alpha);

  OptimalityCertificate cert;
  cert.alpha = Angle::wrap(alpha);

  std::vector<ResidualRow> rows;
  rows.reserve(section.argmax_set.size());
  for (double theta : section.argmax_set) {
    ResidualRow row;
    row.theta = theta;
    row.f_value = eval_F(phi, psi, theta, alpha);
    if (row.f_value <= kSmoothThreshold) continue;  // non-smooth locus: no usable slope
    GradF g = grad_F(phi, psi, theta, alpha);
    row.df_dtheta = g.d_theta;
    row.df_dalpha = g.d_alpha;
    rows.push_back(row);
  }
  if (rows.empty()) {
    UncertifiedCondition un;
    un.reason = "every maximizer sits on the non-smooth locus of F";
    cert.condition = std::move(un);
    return cert;
  }

  auto attach_hessian = [&](double theta) {
    cert.hessian_det = hessian_F(phi, psi, theta, alpha).det;
  };

  if (rows.size() > 1) {
    // Prefer the two-maximizer condition: with several maximizers the
    // unique-max hypothesis of the gradient condition does not apply.
    std::size_t i_min = 0, i_max = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i].df_dalpha < rows[i_min].df_dalpha) i_min = i;
      if (rows[i].df_dalpha > rows[i_max].df_dalpha) i_max = i;
    }
    if (rows[i_min].df_dalpha < -tol && rows[i_max].df_dalpha > tol) {
      OppositeSignsCondition cond;
      cond.theta1 = rows[i_min].theta;
      cond.slope1 = rows[i_min].df_dalpha;
      cond.theta2 = rows[i_max].theta;
      cond.slope2 = rows[i_max].df_dalpha;
      cert.condition = cond;
      return cert;
    }
  }

  // Single maximizer, or no opposite pair: accept any vanishing gradient.
  for (const ResidualRow& row : rows) {
    double residual = std::max(std::fabs(row.df_dtheta), std::fabs(row.df_dalpha));
    if (residual <= tol) {
      CriticalPointCondition cond;
      cond.theta = row.theta;
      cond.grad_residual = residual;
      cert.condition = cond;
      attach_hessian(row.theta);
      return cert;
    }
  }

  UncertifiedCondition un;
  un.reason = rows.size() == 1
                  ? "single maximizer with a nonzero gradient"
                  : "no opposite-signed slope pair and no vanishing gradient among maximizers";
  un.residuals = std::move(rows);
  cert.condition = std::move(un);
  return cert;
}

}  // namespace npd
