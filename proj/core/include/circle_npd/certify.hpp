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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "circle_npd/periodic_function.hpp"

namespace npd {

/// The mismatch surface F has a vanishing gradient at (theta, alpha): the
/// necessary condition when the section has a unique maximizer.
struct CriticalPointCondition {
  double theta = 0.0;
  double grad_residual = 0.0;  // max(|dF/dtheta|, |dF/dalpha|)
};

/// Two maximizers whose one-sided profile slopes bracket zero: moving alpha
/// either way raises the max at one of them.
struct OppositeSignsCondition {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double slope1 = 0.0;  // dF/dalpha at (theta1, alpha) < 0
  double slope2 = 0.0;  // dF/dalpha at (theta2, alpha) > 0
};

/// Zero distance: the rotation maps every critical point of phi onto one of
/// psi with the same kind and value.
struct MatchedCriticalPair {
  double theta_phi = 0.0;
  double theta_psi = 0.0;
  double value = 0.0;
};
struct ZeroDistanceCondition {
  std::vector<MatchedCriticalPair> pairs;
};

/// No necessary condition verified; a true optimum always satisfies one, so
/// this marks the rotation as non-optimal. The table records what was seen.
struct ResidualRow {
  double theta = 0.0;
  double f_value = 0.0;
  double df_dtheta = 0.0;
  double df_dalpha = 0.0;
};
struct UncertifiedCondition {
  std::string reason;
  std::vector<ResidualRow> residuals;
};

struct OptimalityCertificate {
  double alpha = 0.0;
  std::variant<CriticalPointCondition, OppositeSignsCondition, ZeroDistanceCondition,
               UncertifiedCondition>
      condition;
  std::optional<double> hessian_det;  // degeneracy diagnostic at a critical point of F

  bool certified() const { return !std::holds_alternative<UncertifiedCondition>(condition); }
};

/// Check a claimed optimum (alpha, claimed_d) against the necessary
/// optimality conditions. Throws ValueMismatch when claimed_d differs from
/// the recomputed section max by more than tol. Order of attempts: the
/// zero-distance matching when claimed_d is below the zero threshold; the
/// vanishing gradient when the argmax is a single point; an opposite-signed
/// slope pair when it is not; any single vanishing gradient as a fallback;
/// otherwise Uncertified with the full residual table.
OptimalityCertificate certify(const PeriodicFunction& phi, const PeriodicFunction& psi,
                              double alpha, double claimed_d, double tol = 1e-8,
                              std::size_t n_theta = 4096);

}  // namespace npd
