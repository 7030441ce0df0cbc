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

// Acceptance suite: eight end-to-end criteria, one [PASS]/[FAIL] line each,
// exit status = number of failed criteria. Every tolerance is stated inline
// so the log reads as the contract being checked.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "circle_npd/alpha_max.hpp"
#include "circle_npd/angle.hpp"
#include "circle_npd/candidates.hpp"
#include "circle_npd/certify.hpp"
#include "circle_npd/critical_points.hpp"
#include "circle_npd/errors.hpp"
#include "circle_npd/mismatch.hpp"
#include "circle_npd/npd.hpp"
#include "circle_npd/periodic_function.hpp"

using npd::Angle;
using npd::compute_npd;
using npd::f_alpha_max;
using npd::kTau;
using npd::NpdOptions;
using npd::NpdResult;
using npd::PeriodicFunction;

namespace {

constexpr double kPi = npd::kTau / 2.0;
const double kDistB = 3.0 * std::sqrt(3.0) / 4.0;

int g_failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d (%s): %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

PeriodicFunction pair_a_phi() { return PeriodicFunction::fourier(0.25, {-0.25}, {}); }
PeriodicFunction pair_a_psi() { return PeriodicFunction::fourier(0.5, {-0.5}, {}); }
PeriodicFunction pair_b_phi() { return PeriodicFunction::fourier(0.0, {}, {0.0, 0.5}); }
PeriodicFunction pair_b_psi() { return PeriodicFunction::fourier(0.0, {}, {1.0}); }

PeriodicFunction random_morse(std::mt19937& rng, int max_degree = 5) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (;;) {
    const double a0 = coeff(rng);
    std::vector<double> ak(static_cast<std::size_t>(max_degree));
    std::vector<double> bk(static_cast<std::size_t>(max_degree));
    for (auto& a : ak) a = coeff(rng);
    for (auto& b : bk) b = coeff(rng);
    PeriodicFunction f = PeriodicFunction::fourier(a0, ak, bk);
    try {
      if (npd::is_morse(f).morse) return f;
    } catch (const npd::NpdError&) {
    }
  }
}

double set_mismatch(const std::vector<double>& got, const std::vector<double>& expect) {
  if (got.size() != expect.size()) return 1e300;
  double worst = 0.0;
  for (double e : expect) {
    double best = 1e300;
    for (double g : got) best = std::min(best, npd::circular_distance(g, e));
    worst = std::max(worst, best);
  }
  return worst;
}

double g_distance_b = 0.0;  // filled by criterion 1, used by criterion 2

// ---------------------------------------------------------------------------

void criterion_1() {
  const char* name = "four optimal rotations of the stock hard pair";
  try {
    const auto t0 = std::chrono::steady_clock::now();
    const NpdResult r = compute_npd(pair_b_phi(), pair_b_psi());
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    g_distance_b = r.distance;
    const double dist_err = std::fabs(r.distance - kDistB);
    const double set_err =
        set_mismatch(r.optimal_alphas, {0.0, kPi / 2, kPi, 3 * kPi / 2});
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "|d - 3*sqrt(3)/4| = %.3g (tol 1e-6), rotation-set error = %.3g vs "
                  "{0, pi/2, pi, 3pi/2} (tol 1e-6), %.2f s (budget 5 s)",
                  dist_err, set_err, secs);
    report(1, name, dist_err <= 1e-6 && set_err <= 1e-6 && secs < 5.0, buf);
  } catch (const std::exception& e) {
    report(1, name, false, std::string("exception: ") + e.what());
  }
}

void criterion_2() {
  const char* name = "profile value 3/2 at the four trade-off rotations";
  try {
    const PeriodicFunction phi = pair_b_phi(), psi = pair_b_psi();
    double worst = 0.0;
    bool above = true;
    for (double a : {kPi / 4, 3 * kPi / 4, 5 * kPi / 4, 7 * kPi / 4}) {
      const double g = f_alpha_max(phi, psi, a).g_value;
      worst = std::max(worst, std::fabs(g - 1.5));
      above = above && g > g_distance_b;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "max |g - 1.5| = %.3g (tol 1e-8), all strictly above the distance: %s",
                  worst, above ? "yes" : "NO");
    report(2, name, worst <= 1e-8 && above, buf);
  } catch (const std::exception& e) {
    report(2, name, false, std::string("exception: ") + e.what());
  }
}

void criterion_3() {
  const char* name = "unique optimum of the stock smooth pair, saddle certificate";
  try {
    const NpdResult r = compute_npd(pair_a_phi(), pair_a_psi());
    const double dist_err = std::fabs(r.distance - 0.5);
    bool cert_ok = false;
    double residual = 1e300, theta = -1.0;
    if (!r.certificates.empty() &&
        std::holds_alternative<npd::CriticalPointCondition>(r.certificates[0].condition)) {
      const auto& c = std::get<npd::CriticalPointCondition>(r.certificates[0].condition);
      residual = c.grad_residual;
      theta = c.theta;
      // The max of |phi - psi| at the optimal rotation sits at theta = pi
      // (direct evaluation: F(pi, 0) = 1/2, F(0, pi... ) = 0), so the
      // certificate must anchor there.
      cert_ok = residual <= 1e-8 && npd::circular_distance(theta, kPi) <= 1e-6;
    }
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "|d - 0.5| = %.3g (tol 1e-6), gradient residual %.3g at theta = %.6f "
                  "(tol 1e-8, expect pi)",
                  dist_err, residual, theta);
    report(3, name, dist_err <= 1e-6 && cert_ok, buf);
  } catch (const std::exception& e) {
    report(3, name, false, std::string("exception: ") + e.what());
  }
}

void criterion_4() {
  const char* name = "closed-form stationary branches at 32 random rotations";
  try {
    const PeriodicFunction phi = pair_b_phi(), psi = pair_b_psi();
    std::mt19937 rng(804);
    std::uniform_real_distribution<double> u(0.0, kTau);
    double worst = 0.0;
    int tested = 0;
    while (tested < 32) {
      const double a = u(rng);
      bool collides = false;  // at multiples of pi/2 two branches merge
      for (int m = 0; m < 4; ++m)
        if (npd::circular_distance(a, m * kPi / 2) < 0.05) collides = true;
      if (collides) continue;
      ++tested;
      const std::vector<double> expect = {Angle::wrap(a), Angle::wrap(-a / 3),
                                          Angle::wrap(-a / 3 + kTau / 3),
                                          Angle::wrap(-a / 3 + 2 * kTau / 3)};
      const auto roots = npd::mismatch_derivative_roots(phi, psi, a, 4096);
      worst = std::max(worst, set_mismatch(roots, expect));
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "32 rotations, worst branch-root error = %.3g (tol 1e-8)", worst);
    report(4, name, worst <= 1e-8, buf);
  } catch (const std::exception& e) {
    report(4, name, false, std::string("exception: ") + e.what());
  }
}

void criterion_5() {
  const char* name = "bracket containment and certification on 50 random Morse pairs";
  try {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(805);
    int in_bracket = 0, all_certified = 0;
    for (int i = 0; i < 50; ++i) {
      const PeriodicFunction phi = random_morse(rng);
      const PeriodicFunction psi = random_morse(rng);
      const NpdResult r = compute_npd(phi, psi);
      if (r.bracket.lower <= r.distance && r.distance <= r.bracket.upper) ++in_bracket;
      bool certified = !r.certificates.empty();
      for (const auto& c : r.certificates) certified = certified && c.certified();
      if (certified) ++all_certified;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "%d/50 distances inside their bracket, %d/50 pairs fully certified, "
                  "%.1f s (budget 300 s)",
                  in_bracket, all_certified, secs);
    report(5, name, in_bracket == 50 && all_certified == 50 && secs < 300.0, buf);
  } catch (const std::exception& e) {
    report(5, name, false, std::string("exception: ") + e.what());
  }
}

void criterion_6() {
  const char* name = "metric and equivariance suite";
  try {
    NpdOptions opts;  // 2048 resolution keeps the suite fast; tolerances unchanged
    opts.n_theta = 2048;
    opts.n_alpha = 2048;
    std::mt19937 rng(806);
    std::uniform_real_distribution<double> u(0.0, kTau);

    double worst_sym_d = 0.0, worst_sym_set = 0.0;
    for (int i = 0; i < 20; ++i) {
      const PeriodicFunction phi = random_morse(rng, 3);
      const PeriodicFunction psi = random_morse(rng, 3);
      const NpdResult fwd = compute_npd(phi, psi, opts);
      const NpdResult rev = compute_npd(psi, phi, opts);
      worst_sym_d = std::max(worst_sym_d, std::fabs(fwd.distance - rev.distance));
      std::vector<double> mirrored;
      for (double a : rev.optimal_alphas) mirrored.push_back(Angle::wrap(-a));
      worst_sym_set = std::max(worst_sym_set, set_mismatch(fwd.optimal_alphas, mirrored));
    }

    double worst_tri = -1e300;
    for (int i = 0; i < 25; ++i) {
      const PeriodicFunction f1 = random_morse(rng, 3);
      const PeriodicFunction f2 = random_morse(rng, 3);
      const PeriodicFunction f3 = random_morse(rng, 3);
      const double d12 = compute_npd(f1, f2, opts).distance;
      const double d23 = compute_npd(f2, f3, opts).distance;
      const double d13 = compute_npd(f1, f3, opts).distance;
      worst_tri = std::max(worst_tri, d13 - d12 - d23);
    }

    double worst_rot_d = 0.0, worst_rot_set = 0.0;
    for (int i = 0; i < 20; ++i) {
      const PeriodicFunction phi = random_morse(rng, 3);
      const PeriodicFunction psi = random_morse(rng, 3);
      const double beta = u(rng);
      const NpdResult base = compute_npd(phi, psi, opts);
      const NpdResult moved = compute_npd(phi, psi.rotated(beta), opts);
      worst_rot_d = std::max(worst_rot_d, std::fabs(moved.distance - base.distance));
      std::vector<double> expect;
      for (double a : base.optimal_alphas) expect.push_back(Angle::wrap(a - beta));
      worst_rot_set = std::max(worst_rot_set, set_mismatch(moved.optimal_alphas, expect));
    }

    double worst_scale_d = 0.0, worst_scale_set = 0.0;
    const double scales[3] = {-2.0, 0.5, 3.0};
    for (int i = 0; i < 20; ++i) {
      const PeriodicFunction phi = random_morse(rng, 3);
      const PeriodicFunction psi = random_morse(rng, 3);
      const double c = scales[i % 3];
      const NpdResult base = compute_npd(phi, psi, opts);
      const NpdResult scaled = compute_npd(phi.scaled(c), psi.scaled(c), opts);
      worst_scale_d =
          std::max(worst_scale_d, std::fabs(scaled.distance - std::fabs(c) * base.distance));
      worst_scale_set =
          std::max(worst_scale_set, set_mismatch(scaled.optimal_alphas, base.optimal_alphas));
    }

    const bool ok = worst_sym_d <= 1e-9 && worst_sym_set <= 1e-7 && worst_tri <= 2e-6 &&
                    worst_rot_d <= 1e-9 && worst_rot_set <= 1e-7 && worst_scale_d <= 1e-9 &&
                    worst_scale_set <= 1e-7;
    char buf[320];
    std::snprintf(buf, sizeof buf,
                  "symmetry: d %.3g (tol 1e-9) set %.3g (tol 1e-7); triangle slack %.3g "
                  "(tol 2e-6); rotation: d %.3g set %.3g; scale: d %.3g set %.3g",
                  worst_sym_d, worst_sym_set, worst_tri, worst_rot_d, worst_rot_set,
                  worst_scale_d, worst_scale_set);
    report(6, name, ok, buf);
  } catch (const std::exception& e) {
    report(6, name, false, std::string("exception: ") + e.what());
  }
}

void criterion_7() {
  const char* name = "optimal-set cardinality is stable across oracle resolutions";
  try {
    std::mt19937 rng(807);
    int stable = 0;
    NpdOptions coarse, fine;
    coarse.n_alpha = 4096;
    fine.n_alpha = 8192;
    for (int i = 0; i < 20; ++i) {
      const PeriodicFunction phi = random_morse(rng, 4);
      const PeriodicFunction psi = random_morse(rng, 4);
      const std::size_t n1 = compute_npd(phi, psi, coarse).optimal_alphas.size();
      const std::size_t n2 = compute_npd(phi, psi, fine).optimal_alphas.size();
      if (n1 == n2) ++stable;
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "%d/20 pairs report the same cardinality at n_alpha 4096 vs 8192",
                  stable);
    report(7, name, stable == 20, buf);
  } catch (const std::exception& e) {
    report(7, name, false, std::string("exception: ") + e.what());
  }
}

void criterion_8() {
  const char* name = "derivatives, Hessian, and the determinant identity";
  try {
    std::mt19937 rng(808);
    std::uniform_real_distribution<double> u(0.0, kTau);
    double worst_grad = 0.0, worst_hess = 0.0, worst_det = 0.0;

    for (int rep = 0; rep < 10; ++rep) {
      const PeriodicFunction phi = random_morse(rng);
      const PeriodicFunction psi = random_morse(rng);
      int pts = 0;
      while (pts < 20) {  // 200 gradient / Hessian stencils total
        const double t = u(rng), a = u(rng);
        if (npd::eval_F(phi, psi, t, a) < 1e-3) continue;
        ++pts;
        auto F = [&](double th, double al) { return npd::eval_F(phi, psi, th, al); };
        {
          const double h = 1e-6;
          const auto g = npd::grad_F(phi, psi, t, a);
          worst_grad = std::max(
              worst_grad, std::fabs(g.d_theta - (F(t + h, a) - F(t - h, a)) / (2 * h)));
          worst_grad = std::max(
              worst_grad, std::fabs(g.d_alpha - (F(t, a + h) - F(t, a - h)) / (2 * h)));
        }
        {
          const double h = 1e-4;
          const auto H = npd::hessian_F(phi, psi, t, a);
          const double dtt = (F(t + h, a) - 2 * F(t, a) + F(t - h, a)) / (h * h);
          const double daa = (F(t, a + h) - 2 * F(t, a) + F(t, a - h)) / (h * h);
          const double dta = (F(t + h, a + h) - F(t + h, a - h) - F(t - h, a + h) +
                              F(t - h, a - h)) /
                             (4 * h * h);
          worst_hess = std::max({worst_hess, std::fabs(H.m[0][0] - dtt),
                                 std::fabs(H.m[1][1] - daa), std::fabs(H.m[0][1] - dta)});
        }
      }
      int dets = 0;
      while (dets < 100) {  // 1000 determinant identity points total
        const double t = u(rng), a = u(rng);
        if (npd::eval_F(phi, psi, t, a) < 1e-3) continue;
        ++dets;
        const auto H = npd::hessian_F(phi, psi, t, a);
        worst_det = std::max(
            worst_det, std::fabs(H.det - (-phi.deriv(t, 2) * psi.deriv(t + a, 2))));
      }
    }
    char buf[220];
    std::snprintf(buf, sizeof buf,
                  "gradient vs central diff %.3g (tol 1e-6); Hessian entries %.3g (tol "
                  "1e-4); det vs -phi''psi'' %.3g (tol 1e-10) on 1000 points with F > 1e-3",
                  worst_grad, worst_hess, worst_det);
    report(8, name, worst_grad <= 1e-6 && worst_hess <= 1e-4 && worst_det <= 1e-10, buf);
  } catch (const std::exception& e) {
    report(8, name, false, std::string("exception: ") + e.what());
  }
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (g_failures == 0) {
    std::printf("all 8 acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", g_failures);
  }
  return g_failures;
}
