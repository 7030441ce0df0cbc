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

#include "circle_npd/npd.hpp"

#include <algorithm>
#include <cmath>

#include "circle_npd/alpha_max.hpp"
#include "circle_npd/candidates.hpp"
#include "circle_npd/critical_points.hpp"
#include "circle_npd/errors.hpp"
#include "circle_npd/parallel.hpp"
#include "circle_npd/refine.hpp"

namespace npd {
namespace {

void morse_gate(const PeriodicFunction& f, double tol, const char* which) {
  MorseReport report = is_morse(f, tol);
  if (report.morse) return;
  std::vector<double> witnesses;
  for (const CriticalPoint& p : report.witnesses) witnesses.push_back(p.theta);
  throw NotMorse(std::string(which) + " fails the Morse check (|f''| ~ 0 at a critical point)",
                 std::move(witnesses));
}

// Best cell of every run of consecutive argmin cells (circularly).
std::vector<double> run_representatives(const GridOracleResult& oracle, std::size_t n_alpha) {
  const double h_alpha = kTau / static_cast<double>(n_alpha);
  const auto& cells = oracle.argmin_cells;
  if (cells.empty()) return {};

  std::vector<std::size_t> idx(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    idx[i] = static_cast<std::size_t>(std::llround(cells[i] / h_alpha)) % n_alpha;
  }

  std::vector<std::pair<std::size_t, std::size_t>> runs;  // [first, last] inclusive
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (!runs.empty() && idx[i] == runs.back().second + 1) {
      runs.back().second = idx[i];
    } else {
      runs.push_back({idx[i], idx[i]});
    }
  }
  // Merge the wrap-around run.
  if (runs.size() > 1 && runs.front().first == 0 && runs.back().second == n_alpha - 1) {
    runs.front().first = runs.back().first;  // run spans the seam
    runs.pop_back();
  }

  std::vector<double> seeds;
  for (const auto& run : runs) {
    std::size_t best = run.first;
    double best_value = oracle.cell_values[run.first % n_alpha];
    for (std::size_t j = run.first;; ++j) {
      std::size_t cell = j % n_alpha;
      if (oracle.cell_values[cell] < best_value) {
        best_value = oracle.cell_values[cell];
        best = cell;
      }
      if (cell == run.second % n_alpha) break;
    }
    seeds.push_back(static_cast<double>(best) * h_alpha);
  }
  return seeds;
}

// Sharpen a refined rotation whose section has a unique smooth maximizer.
// There the profile is differentiable and stationarity decouples: the
// maximizer is a critical point of phi and its aligned partner a critical
// point of psi, so both angles can be polished by Newton on the derivative
// equations. Value-comparison search alone stalls once profile differences
// fall below the rounding floor (~sqrt(ulp * curvature) in the rotation),
// which leaves slope residuals orders of magnitude above machine precision.
// Returns the input rotation unchanged whenever the shape does not match.
double polish_unique_max(const PeriodicFunction& phi, const PeriodicFunction& psi,
                         const RefineResult& r, std::size_t n_theta) {
  const double loose = 1e-7 * std::max(1.0, r.g_star);
  const AlphaMaxResult section = f_alpha_max(phi, psi, r.alpha_star, n_theta, 1e-7, loose);
  if (section.flat || section.argmax_set.size() != 1) return r.alpha_star;

  const double t = section.argmax_set[0];
  const double dscale = std::max(1.0, phi.lipschitz_bound() + psi.lipschitz_bound());

  auto newton_root = [dscale](const PeriodicFunction& f, double x0) {
    double x = x0;
    for (int iter = 0; iter < 40; ++iter) {
      const double d2 = f.deriv(x, 2);
      if (std::fabs(d2) < 1e-9 * dscale) return x0;  // flat curvature: give up
      const double step = f.deriv(x, 1) / d2;
      x -= step;
      if (std::fabs(step) < 1e-15) break;
    }
    return x;
  };

  const double tp = newton_root(phi, t);
  const double tq = newton_root(psi, t + r.alpha_star);
  if (std::fabs(phi.deriv(tp, 1)) > 1e-11 * dscale) return r.alpha_star;
  if (std::fabs(psi.deriv(tq, 1)) > 1e-11 * dscale) return r.alpha_star;
  if (circular_distance(tp, t) > 1e-4) return r.alpha_star;
  if (circular_distance(tq, t + r.alpha_star) > 1e-4) return r.alpha_star;

  const double cand = Angle::wrap(tq - tp);
  if (circular_distance(cand, r.alpha_star) > 1e-4) return r.alpha_star;
  return cand;
}

}  // namespace

NpdResult compute_npd(const PeriodicFunction& phi, const PeriodicFunction& psi,
                      const NpdOptions& options) {
  if (!options.force_non_morse) {
    morse_gate(phi, options.morse_tol, "phi");
    morse_gate(psi, options.morse_tol, "psi");
  }

  const GridOracleResult oracle = grid_oracle(phi, psi, options.n_alpha, options.n_theta);
  const double width = oracle.bracket.upper - oracle.bracket.lower;

  // Structural candidates. An unstable crossing sweep is retried at doubled
  // resolution, as its own diagnostic asks, before the error propagates.
  std::vector<CandidateRotation> candidates = candidates_critical_pairs(phi, psi);
  {
    std::size_t sweep_n = options.candidate_n_alpha;
    for (;;) {
      try {
        auto crossings =
            candidates_branch_crossings(phi, psi, sweep_n, options.candidate_n_theta);
        candidates.insert(candidates.end(), crossings.begin(), crossings.end());
        break;
      } catch (const BranchTrackingUnstable&) {
        if (sweep_n >= 4096) throw;
        sweep_n *= 2;
      }
    }
  }

  // Seeds: best cell per argmin run, plus every candidate rotation whose
  // neighborhood the oracle has not excluded.
  std::vector<double> seeds = run_representatives(oracle, options.n_alpha);
  {
    const double h_alpha = kTau / static_cast<double>(options.n_alpha);
    const double keep = oracle.grid_min + 2.0 * width;
    for (const CandidateRotation& cand : candidates) {
      std::size_t cell =
          static_cast<std::size_t>(std::floor(cand.alpha / h_alpha + 0.5)) % options.n_alpha;
      if (oracle.cell_values[cell] <= keep) seeds.push_back(cand.alpha);
    }
    std::sort(seeds.begin(), seeds.end());
    std::vector<double> merged;
    for (double s : seeds) {
      if (merged.empty() || s - merged.back() > options.pre_cluster_tol) merged.push_back(s);
    }
    if (merged.size() > 1 &&
        (kTau - merged.back()) + merged.front() <= options.pre_cluster_tol) {
      merged.pop_back();
    }
    seeds = std::move(merged);
  }

  // Refine every seed. A stalled seed keeps its center value: that is still a
  // genuine profile value, so it can only lose a tie, never fake one.
  const double radius = 2.0 * kTau / static_cast<double>(options.n_alpha);
  std::vector<RefineResult> refined(seeds.size());
  parallel_for(seeds.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        refined[i] =
            refine_minimum(phi, psi, seeds[i], radius, options.refine_tol, options.n_theta);
      } catch (const NoImprovement&) {
        refined[i].alpha_star = Angle::wrap(seeds[i]);
        refined[i].g_star = f_alpha_max(phi, psi, seeds[i], options.n_theta).g_value;
      }
    }
  });

  // Derivative-based polish of smooth minima; accepted only when the profile
  // value does not worsen, so a misfired polish can lose a tie, never fake one.
  parallel_for(refined.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      RefineResult& r = refined[i];
      const double cand = polish_unique_max(phi, psi, r, options.n_theta);
      if (cand == r.alpha_star) continue;
      const double g_cand = f_alpha_max(phi, psi, cand, options.n_theta).g_value;
      if (g_cand <= r.g_star + 1e-12 * std::max(1.0, r.g_star)) {
        r.alpha_star = cand;
        r.g_star = g_cand;
      }
    }
  });

  double distance = refined.empty() ? 0.0 : refined[0].g_star;
  for (const RefineResult& r : refined) distance = std::min(distance, r.g_star);

  NpdResult result;
  result.distance = distance;
  result.bracket = oracle.bracket;
  result.profile_resolution = options.n_alpha;

  if (distance < oracle.bracket.lower - 1e-12 || distance > oracle.bracket.upper + 1e-12) {
    throw InconsistentOracle("refined distance escaped the rigorous bracket", distance,
                             oracle.bracket.lower, oracle.bracket.upper);
  }

  if (distance < options.zero_threshold) {
    // Zero-distance regime: rotations must map critical points onto critical
    // points, so enumerate them by matching rather than by g-clustering.
    std::vector<double> alphas;
    const auto cps_phi = critical_points(phi);
    const auto cps_psi = critical_points(psi);
    for (const CriticalPoint& cp : cps_phi) {
      for (const CriticalPoint& cq : cps_psi) {
        if (cq.kind != cp.kind || std::fabs(cq.value - cp.value) > 1e-7) continue;
        double alpha = Angle::wrap(cq.theta - cp.theta);
        if (f_alpha_max(phi, psi, alpha, options.n_theta).g_value < options.zero_threshold) {
          alphas.push_back(alpha);
        }
      }
    }
    std::sort(alphas.begin(), alphas.end());
    std::vector<double> merged;
    for (double a : alphas) {
      if (merged.empty() || a - merged.back() > options.post_cluster_tol) merged.push_back(a);
    }
    if (merged.size() > 1 &&
        (kTau - merged.back()) + merged.front() <= options.post_cluster_tol) {
      merged.pop_back();
    }
    if (!merged.empty()) {
      result.optimal_alphas = std::move(merged);
    } else {
      // No matching succeeded (numerically blurred inputs): fall back to the
      // refined tie set.
      for (const RefineResult& r : refined) {
        if (r.g_star <= distance + options.value_tie_tol)
          result.optimal_alphas.push_back(r.alpha_star);
      }
      std::sort(result.optimal_alphas.begin(), result.optimal_alphas.end());
    }
  } else {
    std::vector<std::pair<double, double>> ties;  // (alpha, g)
    for (const RefineResult& r : refined) {
      if (r.g_star <= distance + options.value_tie_tol) {
        double alpha = r.alpha_star;
        if (kTau - alpha <= options.post_cluster_tol) alpha = 0.0;  // seam representative
        ties.push_back({alpha, r.g_star});
      }
    }
    std::sort(ties.begin(), ties.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& t : ties) {
      if (!merged.empty() && t.first - merged.back().first <= options.post_cluster_tol) {
        if (t.second < merged.back().second) merged.back() = t;
      } else {
        merged.push_back(t);
      }
    }
    if (merged.size() > 1 &&
        (kTau - merged.back().first) + merged.front().first <= options.post_cluster_tol) {
      if (merged.back().second < merged.front().second)
        merged.front().first = merged.back().first;
      merged.pop_back();
    }
    for (const auto& t : merged) result.optimal_alphas.push_back(t.first);
  }

  for (double alpha : result.optimal_alphas) {
    result.certificates.push_back(
        certify(phi, psi, alpha, result.distance, options.cert_tol, options.n_theta));
  }
  return result;
}

}  // namespace npd
