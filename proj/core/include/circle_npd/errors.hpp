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

#include <stdexcept>
#include <string>
#include <vector>

namespace npd {

/// Base class for every library-specific failure.
struct NpdError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A function spec could not be parsed or fails validation.
struct FunctionSpecError : NpdError {
  using NpdError::NpdError;
};

/// A root of f' was found where f'' also vanishes: the function is not Morse
/// at theta and critical points cannot be classified there.
struct DegenerateRoot : NpdError {
  DegenerateRoot(std::string msg, double theta_, double value_, double second_deriv_)
      : NpdError(std::move(msg)), theta(theta_), value(value_), second_derivative(second_deriv_) {}
  double theta;
  double value;
  double second_derivative;
};

/// An input function failed the Morse check and force was not set.
struct NotMorse : NpdError {
  NotMorse(std::string msg, std::vector<double> witness_thetas_)
      : NpdError(std::move(msg)), witness_thetas(std::move(witness_thetas_)) {}
  std::vector<double> witness_thetas;
};

/// F(theta, alpha) = 0 there, so the gradient of |.| does not exist.
struct NotDifferentiable : NpdError {
  NotDifferentiable(std::string msg, double theta_, double alpha_, double f_value_)
      : NpdError(std::move(msg)), theta(theta_), alpha(alpha_), f_value(f_value_) {}
  double theta;
  double alpha;
  double f_value;
};

/// The refined distance escaped the rigorous grid bracket. Always a bug or a
/// tolerance misconfiguration, never a legitimate outcome.
struct InconsistentOracle : NpdError {
  InconsistentOracle(std::string msg, double distance_, double lower_, double upper_)
      : NpdError(std::move(msg)), distance(distance_), lower(lower_), upper(upper_) {}
  double distance;
  double lower;
  double upper;
};

/// A claimed distance does not match g(alpha) at the claimed rotation.
struct ValueMismatch : NpdError {
  ValueMismatch(std::string msg, double claimed_, double actual_)
      : NpdError(std::move(msg)), claimed(claimed_), actual(actual_) {}
  double claimed;
  double actual;
};

/// The local minimization stalled without reaching its radius target.
struct NoImprovement : NpdError {
  using NpdError::NpdError;
};

/// Root counts along the rotation sweep changed faster than the tracker can
/// follow at this resolution.
struct BranchTrackingUnstable : NpdError {
  using NpdError::NpdError;
};

}  // namespace npd
