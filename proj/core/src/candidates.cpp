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

#include "circle_npd/candidates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "circle_npd/critical_points.hpp"
#include "circle_npd/errors.hpp"
#include "circle_npd/parallel.hpp"

namespace npd {
namespace {

// Tolerance on sign products in the crossing conditions: a product within
// this band of zero degenerates into the critical-pair configuration and is
// treated as satisfied.
constexpr double kZeroProductTol = 1e-9;

struct Column {
  std::vector<double> roots;  // sorted, canonical
  bool plateau = false;       // h identically ~0 at this rotation
};

// Roots of h(t) = phi'(t) - psi'(t + alpha) from a dense scan of one column.
// phi_d1 is the precomputed phi' grid (alpha-independent); psi_buf is scratch.
Column scan_column(const PeriodicFunction& phi, const PeriodicFunction& psi, double alpha,
                   const std::vector<double>& phi_d1, double* psi_buf) {
  const std::size_t n = phi_d1.size();
  const double h = kTau / static_cast<double>(n);
  psi.eval_grid(alpha, h, n, 1, psi_buf);

  double hmax = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    psi_buf[j] = phi_d1[j] - psi_buf[j];  // reuse as the h grid
    hmax = std::max(hmax, std::fabs(psi_buf[j]));
  }

  Column col;
  const double hscale = std::max(1.0, phi.lipschitz_bound() + psi.lipschitz_bound());
  if (hmax <= 1e-12 * hscale) {
    col.plateau = true;
    return col;
  }

  auto hf = [&](double t) { return phi.deriv(t, 1) - psi.deriv(t + alpha, 1); };
  auto hd = [&](double t) { return phi.deriv(t, 2) - psi.deriv(t + alpha, 2); };

  auto polish = [&](double root, double width) {
    for (int i = 0; i < 3; ++i) {
      double d = hd(root);
      if (d == 0.0) break;
      double step = hf(root) / d;
      if (std::fabs(step) > width + 1e-12) break;
      double next = root - step;
      if (std::fabs(hf(next)) > std::fabs(hf(root))) break;
      root = next;
      if (std::fabs(step) < 1e-13) break;
    }
    return root;
  };

  for (std::size_t j = 0; j < n; ++j) {
    const double ta = static_cast<double>(j) * h;
    const double a = psi_buf[j];
    const double b = psi_buf[(j + 1) % n];
    if (a == 0.0) {
      col.roots.push_back(Angle::wrap(polish(ta, h)));
    } else if (b != 0.0 && (a < 0.0) != (b < 0.0)) {
      double lo = ta, hi = ta + h, flo = a;
      for (int i = 0; i < 60 && (hi - lo) > 1e-12; ++i) {
        double mid = 0.5 * (lo + hi);
        double fm = hf(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((flo < 0.0) == (fm < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      col.roots.push_back(Angle::wrap(polish(0.5 * (lo + hi), h)));
    }
  }

  std::sort(col.roots.begin(), col.roots.end());
  // Circular dedupe of numerically identical roots.
  std::vector<double> merged;
  for (double r : col.roots) {
    if (merged.empty() || r - merged.back() > 1e-9) merged.push_back(r);
  }
  if (merged.size() > 1 && (kTau - merged.back()) + merged.front() <= 1e-9) merged.pop_back();
  col.roots = std::move(merged);
  return col;
}

// Signed circular displacement from a to b, in (-pi, pi].
double circ_delta(double a, double b) {
  double d = Angle::wrap(b) - Angle::wrap(a);
  if (d > kTau / 2) d -= kTau;
  if (d <= -kTau / 2) d += kTau;
  return d;
}

struct MatchedBranch {
  double ta = 0.0;     // root position at the left column
  double delta = 0.0;  // signed displacement to its right-column continuation
};

// Nearest-root continuation with a jump cap of 3x the median inter-root
// spacing; conflicting claims keep the closer root, the loser is treated as a
// branch death and re-seeded from the next full scan.
std::vector<MatchedBranch> match_columns(const std::vector<double>& cur,
                                         const std::vector<double>& nxt) {
  std::vector<MatchedBranch> out;
  if (cur.empty() || nxt.empty()) return out;

  double cap = kTau / 4;
  if (cur.size() > 1) {
    std::vector<double> gaps;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) gaps.push_back(cur[i + 1] - cur[i]);
    gaps.push_back((kTau - cur.back()) + cur.front());
    std::nth_element(gaps.begin(), gaps.begin() + gaps.size() / 2, gaps.end());
    cap = 3.0 * gaps[gaps.size() / 2];
  }

  std::vector<std::size_t> claim(nxt.size(), static_cast<std::size_t>(-1));
  std::vector<double> claim_dist(nxt.size(), 0.0);
  for (std::size_t i = 0; i < cur.size(); ++i) {
    std::size_t best = 0;
    double best_dist = circular_distance(cur[i], nxt[0]);
    for (std::size_t k = 1; k < nxt.size(); ++k) {
      double d = circular_distance(cur[i], nxt[k]);
      if (d < best_dist) {
        best_dist = d;
        best = k;
      }
    }
    if (best_dist > cap) continue;
    if (claim[best] == static_cast<std::size_t>(-1) || best_dist < claim_dist[best]) {
      claim[best] = i;
      claim_dist[best] = best_dist;
    }
  }
  for (std::size_t k = 0; k < nxt.size(); ++k) {
    if (claim[k] == static_cast<std::size_t>(-1)) continue;
    MatchedBranch m;
    m.ta = cur[claim[k]];
    m.delta = circ_delta(cur[claim[k]], nxt[k]);
    out.push_back(m);
  }
  return out;
}

}  // namespace

std::vector<CandidateRotation> candidates_critical_pairs(const PeriodicFunction& phi,
                                                         const PeriodicFunction& psi) {
  std::vector<CandidateRotation> out;
  const auto cps_phi = critical_points(phi);
  const auto cps_psi = critical_points(psi);
  for (const CriticalPoint& c1 : cps_phi) {
    for (const CriticalPoint& c2 : cps_psi) {
      CandidateRotation cand;
      cand.alpha = Angle::wrap(c2.theta - c1.theta);
      cand.source = CriticalPairSource{c1.theta, c2.theta};
      cand.candidate_value = std::fabs(c1.value - c2.value);
      out.push_back(cand);
    }
  }
  std::sort(out.begin(), out.end(), [](const CandidateRotation& a, const CandidateRotation& b) {
    return a.alpha < b.alpha;
  });
  return out;
}

std::vector<double> mismatch_derivative_roots(const PeriodicFunction& phi,
                                              const PeriodicFunction& psi, double alpha,
                                              std::size_t scan_n) {
  if (scan_n < 64) throw std::invalid_argument("mismatch_derivative_roots needs scan_n >= 64");
  const double h = kTau / static_cast<double>(scan_n);
  std::vector<double> phi_d1(scan_n), buf(scan_n);
  phi.eval_grid(0.0, h, scan_n, 1, phi_d1.data());
  Column col = scan_column(phi, psi, Angle::wrap(alpha), phi_d1, buf.data());
  return col.roots;
}

std::vector<CandidateRotation> candidates_branch_crossings(const PeriodicFunction& phi,
                                                           const PeriodicFunction& psi,
                                                           std::size_t n_alpha,
                                                           std::size_t n_theta) {
  if (n_alpha < 256)
    throw std::invalid_argument("candidates_branch_crossings needs n_alpha >= 256");
  if (n_theta < 64) throw std::invalid_argument("candidates_branch_crossings needs n_theta >= 64");

  const double h_alpha = kTau / static_cast<double>(n_alpha);
  const double h_theta = kTau / static_cast<double>(n_theta);

  std::vector<double> phi_d1(n_theta);
  phi.eval_grid(0.0, h_theta, n_theta, 1, phi_d1.data());

  std::vector<Column> cols(n_alpha);
  parallel_for(n_alpha, [&](std::size_t begin, std::size_t end) {
    std::vector<double> buf(n_theta);
    for (std::size_t j = begin; j < end; ++j) {
      cols[j] = scan_column(phi, psi, static_cast<double>(j) * h_alpha, phi_d1, buf.data());
    }
  });

  // Stability gate: a root-count change is legitimate in isolation (a branch
  // birth, death, or collision), but three changes packed into fewer than 8
  // sweep steps means consecutive events cannot be separated at this
  // resolution.
  std::vector<std::size_t> changes;
  for (std::size_t j = 0; j < n_alpha; ++j) {
    const Column& a = cols[j];
    const Column& b = cols[(j + 1) % n_alpha];
    if (a.plateau || b.plateau) continue;
    if (a.roots.size() != b.roots.size()) changes.push_back(j);
  }
  if (changes.size() >= 3) {
    for (std::size_t i = 0; i < changes.size(); ++i) {
      const std::size_t c0 = changes[i];
      const std::size_t c2 = changes[(i + 2) % changes.size()];
      if ((c2 + n_alpha - c0) % n_alpha < 8) {
        throw BranchTrackingUnstable(
            "root counts changed three times within 8 sweep steps; raise n_alpha");
      }
    }
  }

  const double vscale = std::max(1.0, phi.sup_bound() + psi.sup_bound());
  const double at_grid_tol = 1e-12 * vscale;

  auto vv = [&](double t, double a) { return phi.eval(t) - psi.eval(t + a); };
  auto hf = [&](double t, double a) { return phi.deriv(t, 1) - psi.deriv(t + a, 1); };
  auto hd = [&](double t, double a) { return phi.deriv(t, 2) - psi.deriv(t + a, 2); };

  // Re-solve the stationary equation at rotation a from a nearby seed.
  auto track_root = [&](double seed, double a) {
    double t = seed;
    for (int i = 0; i < 12; ++i) {
      double d = hd(t, a);
      if (d == 0.0) break;
      double step = hf(t, a) / d;
      if (std::fabs(step) > 0.5) break;
      t -= step;
      if (std::fabs(step) < 1e-13) break;
    }
    return t;
  };

  std::vector<CandidateRotation> out;

  auto emit = [&](double alpha_raw, double t1_raw, double t2_raw) {
    double alpha = Angle::wrap(alpha_raw);
    if (kTau - alpha <= 1e-8) alpha = 0.0;  // crossings at the seam are one event
    const double v1 = vv(t1_raw, alpha_raw);
    const double v2 = vv(t2_raw, alpha_raw);
    const double pv = v1 * v2;
    const double pphi = phi.deriv(t1_raw, 1) * phi.deriv(t2_raw, 1);
    // Equal-sign mismatches demand oppositely sloped witnesses of phi;
    // opposite-sign mismatches demand same-sloped witnesses. Products inside
    // the zero band degenerate into the critical-pair case and pass.
    if (pv > kZeroProductTol && !(pphi < kZeroProductTol)) return;
    if (pv < -kZeroProductTol && !(pphi > -kZeroProductTol)) return;

    CandidateRotation cand;
    cand.alpha = alpha;
    BranchCrossingSource src;
    src.theta1 = Angle::wrap(t1_raw);
    src.theta2 = Angle::wrap(t1_raw + alpha_raw);
    src.theta1_tilde = Angle::wrap(t2_raw);
    src.theta2_tilde = Angle::wrap(t2_raw + alpha_raw);
    src.sign_case = pv >= 0.0 ? SignCase::same_sign : SignCase::opposite_sign;
    cand.source = src;
    cand.candidate_value = 0.5 * (std::fabs(v1) + std::fabs(v2));
    out.push_back(cand);
  };

  std::vector<CriticalPoint> phi_cps;

  for (std::size_t j = 0; j < n_alpha; ++j) {
    const double a0 = static_cast<double>(j) * h_alpha;
    const double a1 = a0 + h_alpha;
    const Column& cur = cols[j];
    const Column& nxt = cols[(j + 1) % n_alpha];

    if (cur.plateau) {
      // phi' == psi'.rho_alpha here, so the mismatch is constant in theta and
      // every theta is stationary; witness with phi's own critical points.
      if (phi_cps.empty()) phi_cps = critical_points(phi);
      double t1 = !phi_cps.empty() ? phi_cps[0].theta : 0.0;
      double t2 = phi_cps.size() > 1 ? phi_cps[1].theta : kTau / 2;
      emit(a0, t1, t2);
      continue;
    }
    if (nxt.plateau) continue;

    const auto matched = match_columns(cur.roots, nxt.roots);
    const std::size_t m = matched.size();
    std::vector<double> va(m), vb(m);
    for (std::size_t i = 0; i < m; ++i) {
      va[i] = vv(matched[i].ta, a0);
      vb[i] = vv(matched[i].ta + matched[i].delta, a1);
    }

    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = i + 1; k < m; ++k) {
        const double d0 = std::fabs(va[i]) - std::fabs(va[k]);
        const double d1 = std::fabs(vb[i]) - std::fabs(vb[k]);
        if (std::fabs(d0) <= at_grid_tol) {
          emit(a0, matched[i].ta, matched[k].ta);
          continue;
        }
        if ((d0 < 0.0) == (d1 < 0.0)) continue;

        // Bisect the crossing in alpha, continuing both branches by Newton.
        double lo = a0, hi = a1, dlo = d0;
        double t_i = matched[i].ta, t_k = matched[k].ta;
        for (int it = 0; it < 50 && (hi - lo) > 1e-11; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double frac = (mid - a0) / h_alpha;
          t_i = track_root(matched[i].ta + frac * matched[i].delta, mid);
          t_k = track_root(matched[k].ta + frac * matched[k].delta, mid);
          const double dm = std::fabs(vv(t_i, mid)) - std::fabs(vv(t_k, mid));
          if (dm == 0.0) {
            lo = hi = mid;
            break;
          }
          if ((dlo < 0.0) == (dm < 0.0)) {
            lo = mid;
            dlo = dm;
          } else {
            hi = mid;
          }
        }
        const double alpha_star = 0.5 * (lo + hi);
        const double frac = (alpha_star - a0) / h_alpha;
        t_i = track_root(matched[i].ta + frac * matched[i].delta, alpha_star);
        t_k = track_root(matched[k].ta + frac * matched[k].delta, alpha_star);
        emit(alpha_star, t_i, t_k);
      }
    }
  }

  // Collapse repeated detections of the same crossing (adjacent intervals can
  // both land on a grid-exact crossing; the seam maps to alpha = 0).
  std::sort(out.begin(), out.end(), [](const CandidateRotation& a, const CandidateRotation& b) {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return std::get<BranchCrossingSource>(a.source).theta1 <
           std::get<BranchCrossingSource>(b.source).theta1;
  });
  std::vector<CandidateRotation> dedup;
  for (const CandidateRotation& c : out) {
    bool dup = false;
    const auto& b = std::get<BranchCrossingSource>(c.source);
    for (auto it = dedup.rbegin(); it != dedup.rend(); ++it) {
      if (circular_distance(it->alpha, c.alpha) > 1e-8) break;
      const auto& a = std::get<BranchCrossingSource>(it->source);
      if ((circular_distance(a.theta1, b.theta1) <= 1e-6 &&
           circular_distance(a.theta1_tilde, b.theta1_tilde) <= 1e-6) ||
          (circular_distance(a.theta1, b.theta1_tilde) <= 1e-6 &&
           circular_distance(a.theta1_tilde, b.theta1) <= 1e-6)) {
        dup = true;
        break;
      }
    }
    if (!dup) dedup.push_back(c);
  }
  return dedup;
}

}  // namespace npd
