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

#include "circle_npd/angle.hpp"

namespace npd {

/// A real-valued C^2 function on the circle. Two backends:
///
///  * fourier:  a0 + sum_k a_k cos(k theta) + b_k sin(k theta), k = 1..K,
///              with exact derivatives of any order we need (1 and 2).
///  * samples:  M values on the uniform grid theta_j = 2*pi*j/M, interpolated
///              by the C^2 periodic cubic spline through them.
///
/// Instances are immutable; every operation is const and thread-safe.
class PeriodicFunction {
 public:
  enum class Backend { fourier, samples };

  /// Trigonometric polynomial. cos_coeffs[k-1] multiplies cos(k theta) and
  /// sin_coeffs[k-1] multiplies sin(k theta); unequal lengths are zero-padded.
  static PeriodicFunction fourier(double a0, std::vector<double> cos_coeffs,
                                  std::vector<double> sin_coeffs);

  /// Periodic cubic spline through values[j] at theta_j = 2*pi*j/M. Needs at
  /// least 4 samples.
  static PeriodicFunction samples(std::vector<double> values);

  double eval(double theta) const;
  double operator()(double theta) const { return eval(theta); }

  /// order must be 1 or 2.
  double deriv(double theta, int order) const;

  /// Evaluate f (order 0) or a derivative at theta0 + j*step, j = 0..n-1.
  /// Output is a pure function of the arguments: grids are evaluated in
  /// fixed-size chunks re-anchored with exact trig calls, so results do not
  /// depend on how callers split or parallelize surrounding work.
  void eval_grid(double theta0, double step, std::size_t n, int order, double* out) const;

  /// Upper bound on max |f'|. Exact coefficient sum for fourier; dense-grid
  /// max times a 1.05 safety factor for samples.
  double lipschitz_bound() const { return lipschitz_; }

  /// Upper bound on max |f|.
  double sup_bound() const { return sup_; }

  Backend backend() const;

  // fourier accessors (throw std::logic_error on the wrong backend)
  double a0() const;
  const std::vector<double>& cos_coeffs() const;
  const std::vector<double>& sin_coeffs() const;
  // samples accessor
  const std::vector<double>& sample_values() const;

  /// g(theta) = f(theta + beta). Exact for fourier and for sample shifts by a
  /// whole number of grid steps; other sample shifts re-interpolate.
  PeriodicFunction rotated(double beta) const;

  /// g(theta) = c * f(theta).
  PeriodicFunction scaled(double c) const;

 private:
  struct Trig {
    double a0 = 0.0;
    std::vector<double> ak;  // cos coefficients, k = 1..K
    std::vector<double> bk;  // sin coefficients, k = 1..K
  };
  struct Spline {
    std::vector<double> y;    // samples, size M
    std::vector<double> mo;   // second derivatives at the knots
    std::vector<double> c1;   // per-interval linear coefficient
    std::vector<double> c3;   // per-interval cubic coefficient
    double h = 0.0;           // knot spacing 2*pi/M
  };

  explicit PeriodicFunction(Trig t);
  explicit PeriodicFunction(Spline s);
  void compute_bounds();

  std::variant<Trig, Spline> data_;
  double lipschitz_ = 0.0;
  double sup_ = 0.0;
};

}  // namespace npd
