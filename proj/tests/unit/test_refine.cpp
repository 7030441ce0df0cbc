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

#include <cmath>
#include <random>

#include <doctest.h>

#include "circle_npd/alpha_max.hpp"
#include "circle_npd/refine.hpp"
#include "test_helpers.hpp"

using npd::f_alpha_max;
using npd::kTau;
using npd::PeriodicFunction;
using npd::refine_minimum;
using npd_test::kDistB;
using npd_test::kPi;

TEST_CASE("pair A: refinement converges to the unique minimum") {
  const PeriodicFunction phi = npd_test::pair_a_phi();
  const PeriodicFunction psi = npd_test::pair_a_psi();
  const auto r = refine_minimum(phi, psi, 0.3, 0.5, 1e-10);
  CHECK(npd::circular_distance(r.alpha_star, 0.0) <= 1e-8);
  CHECK(r.g_star == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("pair B: each basin refines to its own optimal rotation") {
  const PeriodicFunction phi = npd_test::pair_b_phi();
  const PeriodicFunction psi = npd_test::pair_b_psi();
  struct Seed {
    double start, expect;
  };
  for (const auto& s : {Seed{0.15, 0.0}, Seed{1.45, kPi / 2}, Seed{3.0, kPi},
                        Seed{4.85, 3 * kPi / 2}}) {
    const auto r = refine_minimum(phi, psi, s.start, 0.3, 1e-10);
    CHECK(npd::circular_distance(r.alpha_star, s.expect) <= 1e-8);
    // These minima are kinks (branch crossings with slopes -+1/2), so the
    // value error is ~ half the final rotation error, not its square.
    CHECK(r.g_star == doctest::Approx(kDistB).epsilon(2e-10));
  }
}

TEST_CASE("refinement never worsens the seed") {
  std::mt19937 rng(501);
  std::uniform_real_distribution<double> u(0.0, kTau);
  const PeriodicFunction phi = npd_test::pair_b_phi();
  const PeriodicFunction psi = npd_test::pair_b_psi();
  for (int i = 0; i < 12; ++i) {
    const double a0 = u(rng);
    const double g0 = f_alpha_max(phi, psi, a0).g_value;
    const auto r = refine_minimum(phi, psi, a0, 0.2, 1e-9);
    CHECK(r.g_star <= g0 + 1e-14);
    // The reported value is the profile value at the reported rotation.
    CHECK(r.g_star ==
          doctest::Approx(f_alpha_max(phi, psi, r.alpha_star).g_value).epsilon(1e-12));
  }
}

TEST_CASE("result rotation is canonical") {
  const PeriodicFunction phi = npd_test::pair_b_phi();
  const PeriodicFunction psi = npd_test::pair_b_psi();
  // A seed just below 2*pi refines across the seam.
  const auto r = refine_minimum(phi, psi, kTau - 0.05, 0.2, 1e-10);
  CHECK(r.alpha_star >= 0.0);
  CHECK(r.alpha_star < kTau);
  CHECK(npd::circular_distance(r.alpha_star, 0.0) <= 1e-8);
}
