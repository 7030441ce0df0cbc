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

enum class CriticalKind { minimum, maximum };

struct CriticalPoint {
  double theta = 0.0;              // canonical in [0, 2*pi)
  double value = 0.0;              // f(theta)
  double second_derivative = 0.0;  // f''(theta); sign decides kind
  CriticalKind kind = CriticalKind::minimum;
};

/// All simple roots of f' on [0, 2*pi), sorted by theta.
///
/// Dense sign-change scan (scan_n samples) -> bisection to width tol -> one
/// Newton polish. A second pass hunts tangential roots, where f' touches zero
/// without crossing: those cannot be classified and throw DegenerateRoot, as
/// does an identically vanishing derivative.
std::vector<CriticalPoint> critical_points(const PeriodicFunction& f, double tol = 1e-10,
                                           std::size_t scan_n = 4096);

struct MorseReport {
  bool morse = true;
  std::vector<CriticalPoint> witnesses;  // critical points with |f''| <= tol
};

/// morse == true iff every critical point has |f''| > tol. Tangential roots
/// of f' (caught as DegenerateRoot) also report morse == false, with the
/// offending point as the witness.
MorseReport is_morse(const PeriodicFunction& f, double tol = 1e-8);

}  // namespace npd
