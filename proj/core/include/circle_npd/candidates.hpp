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
#include <variant>
#include <vector>

#include "circle_npd/periodic_function.hpp"

namespace npd {

enum class SignCase { same_sign, opposite_sign };

/// Witness: theta1 critical for phi, theta2 critical for psi; alpha = theta2 - theta1.
struct CriticalPairSource {
  double theta1 = 0.0;
  double theta2 = 0.0;
};

/// Witness: two matched-derivative pairs at the same rotation,
/// theta2 = theta1 + alpha and theta2_tilde = theta1_tilde + alpha, whose
/// mismatch magnitudes |phi - psi.rho_alpha| agree.
struct BranchCrossingSource {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta1_tilde = 0.0;
  double theta2_tilde = 0.0;
  SignCase sign_case = SignCase::same_sign;
};

struct CandidateRotation {
  double alpha = 0.0;
  std::variant<CriticalPairSource, BranchCrossingSource> source;
  double candidate_value = 0.0;  // |phi - psi| at the witness
};

/// Every pairing of a critical point of phi with one of psi: an optimal
/// rotation with a unique maximizer must align two such points, and the
/// distance is realized as a critical-value difference.
std::vector<CandidateRotation> candidates_critical_pairs(const PeriodicFunction& phi,
                                                         const PeriodicFunction& psi);

/// Sorted roots of h(theta) = phi'(theta) - psi'(theta + alpha) on [0, 2*pi):
/// the stationary set of the signed mismatch section at this rotation.
std::vector<double> mismatch_derivative_roots(const PeriodicFunction& phi,
                                              const PeriodicFunction& psi, double alpha,
                                              std::size_t scan_n = 1024);

/// Sweep alpha over a grid, track the root branches of the stationary
/// equation across columns (nearest-root continuation with a jump cap,
/// re-seeding at births/deaths), and locate rotations where two branches
/// carry mismatch values of equal magnitude — the configurations where the
/// maximizing branch of the profile g can switch. Each located crossing is
/// checked against the derivative-sign conditions that a minimax trade-off
/// requires and emitted with its four witness angles.
///
/// Throws BranchTrackingUnstable when root counts change faster than once
/// per 8 grid steps (resolution too coarse to trust the continuation).
std::vector<CandidateRotation> candidates_branch_crossings(const PeriodicFunction& phi,
                                                           const PeriodicFunction& psi,
                                                           std::size_t n_alpha = 1024,
                                                           std::size_t n_theta = 1024);

}  // namespace npd
