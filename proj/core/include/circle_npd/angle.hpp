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

#include <cmath>
#include <numbers>

namespace npd {

inline constexpr double kTau = 2.0 * std::numbers::pi_v<double>;

/// A point on the circle, stored as a canonical representative in [0, 2*pi).
///
/// Wrapping uses fmod, which is exact in IEEE-754 arithmetic: the only error
/// in a wrapped angle is whatever error the caller's expression already
/// carried. The canonical range is half-open, so 2*pi collapses to 0.
class Angle {
 public:
  Angle() = default;
  explicit Angle(double raw) : value_(wrap(raw)) {}

  double value() const { return value_; }

  /// Reduce any finite double into [0, 2*pi).
  static double wrap(double x) {
    double r = std::fmod(x, kTau);
    if (r < 0.0) r += kTau;
    if (r >= kTau) r -= kTau;  // r == kTau can appear after the += above
    return r == 0.0 ? 0.0 : r; // normalize -0.0
  }

  Angle operator+(double delta) const { return Angle(value_ + delta); }
  Angle operator-(double delta) const { return Angle(value_ - delta); }
  /// Rotation taking b to a, canonical in [0, 2*pi).
  friend Angle operator-(Angle a, Angle b) { return Angle(a.value_ - b.value_); }

 private:
  double value_ = 0.0;
};

/// Shortest arc length between two canonical angles; always in [0, pi].
inline double circular_distance(double a, double b) {
  double d = std::fabs(Angle::wrap(a) - Angle::wrap(b));
  return d > kTau / 2 ? kTau - d : d;
}

/// Two angles are the same point iff their difference is a multiple of 2*pi
/// up to tol.
inline bool approx_equal(Angle a, Angle b, double tol) {
  return circular_distance(a.value(), b.value()) <= tol;
}

}  // namespace npd
