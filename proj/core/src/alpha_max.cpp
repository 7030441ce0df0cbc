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

#include "circle_npd/alpha_max.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "circle_npd/mismatch.hpp"

namespace npd {
namespace {

struct Peak {
  double theta;
  double value;  // |v(theta)|
};

}  // namespace

AlphaMaxResult f_alpha_max(const PeriodicFunction& phi, const PeriodicFunction& psi, double alpha,
                           std::size_t n_theta, double cluster_tol, double argmax_value_tol) {
  if (n_theta < 64) throw std::invalid_argument("f_alpha_max needs n_theta >= 64");

  const double a = Angle::wrap(alpha);
  const double h = kTau / static_cast<double>(n_theta);

  AlphaMaxResult result;
  result.alpha = a;

  std::vector<double> v(n_theta);
  {
    std::vector<double> vpsi(n_theta);
    phi.eval_grid(0.0, h, n_theta, 0, v.data());
    psi.eval_grid(a, h, n_theta, 0, vpsi.data());
    for (std::size_t j = 0; j < n_theta; ++j) v[j] -= vpsi[j];
  }

  double grid_max = 0.0;
  std::size_t grid_arg = 0;
  for (std::size_t j = 0; j < n_theta; ++j) {
    double m = std::fabs(v[j]);
    if (m > grid_max) {
      grid_max = m;
      grid_arg = j;
    }
  }

  const double scale = std::max(1.0, phi.sup_bound() + psi.sup_bound());
  if (grid_max <= 1e-12 * scale) {
    // The section vanishes identically: phi equals the rotated psi.
    result.flat = true;
    double t = static_cast<double>(grid_arg) * h;
    result.g_value = std::fabs(signed_mismatch(phi, psi, t, a));
    result.argmax_set.push_back(Angle::wrap(t));
    return result;
  }

  auto vf = [&](double t) { return signed_mismatch(phi, psi, t, a); };
  auto vd = [&](double t) { return phi.deriv(t, 1) - psi.deriv(t + a, 1); };
  auto vdd = [&](double t) { return phi.deriv(t, 2) - psi.deriv(t + a, 2); };

  auto bisect_vd = [&](double lo, double hi, double flo) {
    for (int i = 0; i < 80 && (hi - lo) > 1e-12; ++i) {
      double mid = 0.5 * (lo + hi);
      double fm = vd(mid);
      if (fm == 0.0) return mid;
      if ((flo < 0.0) == (fm < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  std::vector<Peak> peaks;
  for (std::size_t j = 0; j < n_theta; ++j) {
    const double prev = std::fabs(v[(j + n_theta - 1) % n_theta]);
    const double cur = std::fabs(v[j]);
    const double next = std::fabs(v[(j + 1) % n_theta]);
    if (!(cur > prev && cur >= next)) continue;

    const double tl = static_cast<double>(j) * h - h;
    const double tm = static_cast<double>(j) * h;
    const double tr = tm + h;

    // Sharpen on the signed branch: the lobe keeps one sign around its peak,
    // so a root of v' inside the bracket is the true local max of |v|.
    double root = tm;
    double wl = vd(tl), wm = vd(tm), wr = vd(tr);
    bool found = false;
    if (wm == 0.0) {
      found = true;
    } else if (wl != 0.0 && (wl < 0.0) != (wm < 0.0)) {
      root = bisect_vd(tl, tm, wl);
      found = true;
    } else if (wr != 0.0 && (wm < 0.0) != (wr < 0.0)) {
      root = bisect_vd(tm, tr, wm);
      found = true;
    }
    if (found) {
      double curv = vdd(root);
      if (curv != 0.0) {
        double step = vd(root) / curv;
        if (std::fabs(step) < h) {
          double polished = root - step;
          if (std::fabs(vd(polished)) <= std::fabs(vd(root))) root = polished;
        }
      }
      // Guard: refinement must stay on the same lobe and not lose value.
      bool same_lobe = (vf(root) < 0.0) == (v[j] < 0.0);
      if (!same_lobe || std::fabs(vf(root)) + 1e-15 * scale < cur) root = tm;
    }
    peaks.push_back({root, std::fabs(vf(root))});
  }

  if (peaks.empty()) peaks.push_back({static_cast<double>(grid_arg) * h, grid_max});

  double gmax = 0.0;
  for (const Peak& p : peaks) gmax = std::max(gmax, p.value);
  result.g_value = gmax;

  std::vector<Peak> members;
  for (const Peak& p : peaks) {
    if (p.value >= gmax - argmax_value_tol) members.push_back({Angle::wrap(p.theta), p.value});
  }
  std::sort(members.begin(), members.end(),
            [](const Peak& x, const Peak& y) { return x.theta < y.theta; });

  // Cluster circularly, keeping the best representative of each cluster.
  std::vector<Peak> clustered;
  for (const Peak& p : members) {
    if (!clustered.empty() && p.theta - clustered.back().theta <= cluster_tol) {
      if (p.value > clustered.back().value) clustered.back() = p;
    } else {
      clustered.push_back(p);
    }
  }
  if (clustered.size() > 1 &&
      (kTau - clustered.back().theta) + clustered.front().theta <= cluster_tol) {
    if (clustered.back().value > clustered.front().value) clustered.front() = clustered.back();
    clustered.pop_back();
  }

  for (const Peak& p : clustered) {
    result.argmax_set.push_back(p.theta);
    if (p.value > kSmoothThreshold) result.residuals.push_back(std::fabs(vd(p.theta)));
  }
  return result;
}

}  // namespace npd
