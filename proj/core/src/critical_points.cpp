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

#include "circle_npd/critical_points.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "circle_npd/errors.hpp"

namespace npd {
namespace {

// Bisect a sign change of `fn` on [a, b] down to width tol. Assumes
// fn(a) * fn(b) < 0.
template <typename Fn>
double bisect(Fn&& fn, double a, double b, double fa, double tol) {
  for (int i = 0; i < 200 && (b - a) > tol; ++i) {
    double m = 0.5 * (a + b);
    double fm = fn(m);
    if (fm == 0.0) return m;
    if ((fa < 0.0) == (fm < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// One Newton step on f' from t, accepted only if it stays near [lo, hi] and
// does not increase |f'|.
double newton_polish(const PeriodicFunction& f, double t, double lo, double hi) {
  double d1 = f.deriv(t, 1);
  double d2 = f.deriv(t, 2);
  if (d2 == 0.0) return t;
  double step = d1 / d2;
  double guard = 2.0 * (hi - lo) + 1e-12;
  if (std::fabs(step) > guard) return t;
  double tn = t - step;
  return std::fabs(f.deriv(tn, 1)) <= std::fabs(d1) ? tn : t;
}

}  // namespace

std::vector<CriticalPoint> critical_points(const PeriodicFunction& f, double tol,
                                           std::size_t scan_n) {
  if (scan_n < 16) throw std::invalid_argument("critical_points needs scan_n >= 16");
  if (!(tol > 0.0)) throw std::invalid_argument("critical_points needs tol > 0");

  const double h = kTau / static_cast<double>(scan_n);
  std::vector<double> d1(scan_n + 1);
  f.eval_grid(0.0, h, scan_n, 1, d1.data());
  d1[scan_n] = d1[0];  // periodic closure

  double dscale = 0.0;
  for (std::size_t j = 0; j < scan_n; ++j) dscale = std::max(dscale, std::fabs(d1[j]));
  if (dscale <= 1e-14 * std::max(1.0, f.sup_bound())) {
    throw DegenerateRoot("derivative vanishes on the whole circle", 0.0, f.eval(0.0),
                         f.deriv(0.0, 2));
  }

  auto fprime = [&](double t) { return f.deriv(t, 1); };
  std::vector<double> roots;

  for (std::size_t j = 0; j < scan_n; ++j) {
    const double ta = static_cast<double>(j) * h;
    const double tb = ta + h;
    const double a = d1[j], b = d1[j + 1];
    if (a == 0.0) {
      roots.push_back(newton_polish(f, ta, ta, tb));
    } else if (b != 0.0 && (a < 0.0) != (b < 0.0)) {
      double r = bisect(fprime, ta, tb, a, tol);
      roots.push_back(newton_polish(f, r, ta, tb));
    }
  }

  // Tangency pass: a local minimum of |f'| that dips near zero without a sign
  // change is a root the crossing scan cannot see; if f'' crosses zero there
  // and f' vanishes at that crossing, the root is degenerate.
  const double dip_tol = 1e-4 * std::max(1.0, dscale);
  for (std::size_t j = 0; j < scan_n; ++j) {
    const double prev = d1[(j + scan_n - 1) % scan_n];
    const double cur = d1[j];
    const double next = d1[j + 1];
    if (cur == 0.0 || prev == 0.0 || next == 0.0) continue;            // crossing scan owns these
    if ((prev < 0.0) != (cur < 0.0) || (cur < 0.0) != (next < 0.0)) continue;
    if (!(std::fabs(cur) < std::fabs(prev) && std::fabs(cur) <= std::fabs(next))) continue;
    if (std::fabs(cur) >= dip_tol) continue;
    const double ta = static_cast<double>(j) * h - h;
    const double tb = static_cast<double>(j) * h + h;
    double da = f.deriv(ta, 2), db = f.deriv(tb, 2);
    if (da == 0.0 || db == 0.0 || (da < 0.0) == (db < 0.0)) continue;
    auto fsecond = [&](double t) { return f.deriv(t, 2); };
    double t = bisect(fsecond, ta, tb, da, tol);
    if (std::fabs(f.deriv(t, 1)) <= 1e-8 * std::max(1.0, dscale)) {
      throw DegenerateRoot("tangential root of the derivative: f' = f'' = 0", Angle::wrap(t),
                           f.eval(t), f.deriv(t, 2));
    }
  }

  for (double& r : roots) r = Angle::wrap(r);
  std::sort(roots.begin(), roots.end());

  // Merge numerically duplicate roots (circularly), keeping the better one.
  const double dedupe = std::max(tol, 1e-9);
  std::vector<double> merged;
  for (double r : roots) {
    if (!merged.empty() && r - merged.back() <= dedupe) {
      if (std::fabs(f.deriv(r, 1)) < std::fabs(f.deriv(merged.back(), 1))) merged.back() = r;
    } else {
      merged.push_back(r);
    }
  }
  if (merged.size() > 1 && (kTau - merged.back()) + merged.front() <= dedupe) {
    if (std::fabs(f.deriv(merged.back(), 1)) < std::fabs(f.deriv(merged.front(), 1)))
      merged.front() = merged.back();
    merged.pop_back();
  }

  std::vector<CriticalPoint> out;
  out.reserve(merged.size());
  for (double r : merged) {
    CriticalPoint p;
    p.theta = Angle::wrap(r);
    p.value = f.eval(r);
    p.second_derivative = f.deriv(r, 2);
    p.kind = p.second_derivative < 0.0 ? CriticalKind::maximum : CriticalKind::minimum;
    out.push_back(p);
  }
  std::sort(out.begin(), out.end(),
            [](const CriticalPoint& x, const CriticalPoint& y) { return x.theta < y.theta; });
  return out;
}

MorseReport is_morse(const PeriodicFunction& f, double tol) {
  MorseReport report;
  try {
    for (const CriticalPoint& p : critical_points(f)) {
      if (std::fabs(p.second_derivative) <= tol) {
        report.morse = false;
        report.witnesses.push_back(p);
      }
    }
  } catch (const DegenerateRoot& e) {
    report.morse = false;
    CriticalPoint p;
    p.theta = Angle::wrap(e.theta);
    p.value = e.value;
    p.second_derivative = e.second_derivative;
    p.kind = e.second_derivative < 0.0 ? CriticalKind::maximum : CriticalKind::minimum;
    report.witnesses.push_back(p);
  }
  return report;
}

}  // namespace npd
