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

#include "circle_npd/certify.hpp"
#include "circle_npd/grid_oracle.hpp"
#include "circle_npd/periodic_function.hpp"

namespace npd {

struct NpdOptions {
  std::size_t n_theta = 4096;            // theta grid of the oracle and refiner
  std::size_t n_alpha = 4096;            // alpha grid of the oracle
  std::size_t candidate_n_alpha = 1024;  // sweep resolution of the crossing search
  std::size_t candidate_n_theta = 1024;  // per-column root-scan resolution
  double refine_tol = 1e-10;             // radius target of the local refiner
  double pre_cluster_tol = 1e-4;         // seed dedupe before refinement
  double post_cluster_tol = 1e-7;        // distinct-minimizer tolerance after refinement
  double zero_threshold = 1e-9;          // below this the zero-distance regime applies
  double cert_tol = 1e-8;                // certificate residual tolerance
  double morse_tol = 1e-8;               // |f''| gate at critical points
  double value_tie_tol = 1e-9;           // refined minima within this of the best all count
  bool force_non_morse = false;          // skip the Morse gate
};

struct NpdResult {
  double distance = 0.0;
  Bracket bracket;
  std::vector<double> optimal_alphas;              // canonical, sorted, duplicate-free
  std::vector<OptimalityCertificate> certificates;  // one per rotation, same order
  std::size_t profile_resolution = 0;              // n_alpha the oracle ran at
};

/// End-to-end distance computation:
///   Morse gate -> rigorous grid oracle -> structural candidates (critical
///   pairs + branch crossings) -> local refinement of every surviving seed ->
///   cluster the minimizers that tie at the global minimum -> certificates.
///
/// The two pathways check each other: the oracle bracket is complete (the
/// distance provably lies inside), the candidates are sharp (they pin down
/// where minimizers can sit). A refined distance outside the bracket throws
/// InconsistentOracle. If the crossing sweep reports instability, it is
/// retried at doubled resolution up to 4096 columns before the error
/// propagates.
NpdResult compute_npd(const PeriodicFunction& phi, const PeriodicFunction& psi,
                      const NpdOptions& options = {});

}  // namespace npd
