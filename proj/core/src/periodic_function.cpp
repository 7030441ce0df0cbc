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

#include "circle_npd/periodic_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "circle_npd/errors.hpp"

namespace npd {
namespace {

void require_finite(const std::vector<double>& v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) throw FunctionSpecError(std::string(what) + " contains a non-finite value");
  }
}

// Solve the cyclic tridiagonal system (1, 4, 1) x = r with unit corner
// entries, the continuity system of the uniform periodic cubic spline.
// Rank-one update of a plain tridiagonal solve.
std::vector<double> solve_spline_moments(const std::vector<double>& r) {
  const std::size_t n = r.size();
  const double gamma = -4.0;
  std::vector<double> diag(n, 4.0);
  diag[0] = 4.0 - gamma;
  diag[n - 1] = 4.0 - 1.0 / gamma;

  auto thomas = [&](const std::vector<double>& rhs) {
    std::vector<double> cp(n), x(n);
    cp[0] = 1.0 / diag[0];
    x[0] = rhs[0] / diag[0];
    for (std::size_t i = 1; i < n; ++i) {
      double m = diag[i] - cp[i - 1];
      cp[i] = 1.0 / m;
      x[i] = (rhs[i] - x[i - 1]) / m;
    }
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= cp[i] * x[i + 1];
    return x;
  };

  std::vector<double> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = 1.0;
  std::vector<double> x = thomas(r);
  std::vector<double> z = thomas(u);
  double fact = (x[0] + x[n - 1] / gamma) / (1.0 + z[0] + z[n - 1] / gamma);
  for (std::size_t i = 0; i < n; ++i) x[i] -= fact * z[i];
  return x;
}

}  // namespace

PeriodicFunction PeriodicFunction::fourier(double a0, std::vector<double> cos_coeffs,
                                           std::vector<double> sin_coeffs) {
  if (!std::isfinite(a0)) throw FunctionSpecError("a0 is not finite");
  require_finite(cos_coeffs, "cos coefficients");
  require_finite(sin_coeffs, "sin coefficients");
  std::size_t k = std::max(cos_coeffs.size(), sin_coeffs.size());
  cos_coeffs.resize(k, 0.0);
  sin_coeffs.resize(k, 0.0);
  Trig t;
  t.a0 = a0;
  t.ak = std::move(cos_coeffs);
  t.bk = std::move(sin_coeffs);
  return PeriodicFunction(std::move(t));
}

PeriodicFunction PeriodicFunction::samples(std::vector<double> values) {
  if (values.size() < 4) throw FunctionSpecError("samples backend needs at least 4 values");
  require_finite(values, "sample values");
  const std::size_t m = values.size();
  const double h = kTau / static_cast<double>(m);

  std::vector<double> rhs(m);
  for (std::size_t j = 0; j < m; ++j) {
    double ym = values[(j + m - 1) % m];
    double yp = values[(j + 1) % m];
    rhs[j] = 6.0 * (ym - 2.0 * values[j] + yp) / (h * h);
  }
  Spline s;
  s.mo = solve_spline_moments(rhs);
  s.h = h;
  s.c1.resize(m);
  s.c3.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    double mo_next = s.mo[(j + 1) % m];
    double y_next = values[(j + 1) % m];
    s.c1[j] = (y_next - values[j]) / h - h * (2.0 * s.mo[j] + mo_next) / 6.0;
    s.c3[j] = (mo_next - s.mo[j]) / (6.0 * h);
  }
  s.y = std::move(values);
  return PeriodicFunction(std::move(s));
}

PeriodicFunction::PeriodicFunction(Trig t) : data_(std::move(t)) { compute_bounds(); }
PeriodicFunction::PeriodicFunction(Spline s) : data_(std::move(s)) { compute_bounds(); }

PeriodicFunction::Backend PeriodicFunction::backend() const {
  return std::holds_alternative<Trig>(data_) ? Backend::fourier : Backend::samples;
}

double PeriodicFunction::a0() const {
  if (auto* t = std::get_if<Trig>(&data_)) return t->a0;
  throw std::logic_error("a0() on a samples-backed function");
}
const std::vector<double>& PeriodicFunction::cos_coeffs() const {
  if (auto* t = std::get_if<Trig>(&data_)) return t->ak;
  throw std::logic_error("cos_coeffs() on a samples-backed function");
}
const std::vector<double>& PeriodicFunction::sin_coeffs() const {
  if (auto* t = std::get_if<Trig>(&data_)) return t->bk;
  throw std::logic_error("sin_coeffs() on a samples-backed function");
}
const std::vector<double>& PeriodicFunction::sample_values() const {
  if (auto* s = std::get_if<Spline>(&data_)) return s->y;
  throw std::logic_error("sample_values() on a fourier-backed function");
}

double PeriodicFunction::eval(double theta) const {
  double t = Angle::wrap(theta);
  if (auto* tr = std::get_if<Trig>(&data_)) {
    double acc = tr->a0;
    for (std::size_t i = 0; i < tr->ak.size(); ++i) {
      double kt = static_cast<double>(i + 1) * t;
      acc += tr->ak[i] * std::cos(kt) + tr->bk[i] * std::sin(kt);
    }
    return acc;
  }
  const Spline& s = std::get<Spline>(data_);
  std::size_t j = std::min(static_cast<std::size_t>(t / s.h), s.y.size() - 1);
  double u = t - static_cast<double>(j) * s.h;
  return s.y[j] + u * (s.c1[j] + u * (0.5 * s.mo[j] + u * s.c3[j]));
}

double PeriodicFunction::deriv(double theta, int order) const {
  if (order != 1 && order != 2) throw std::invalid_argument("deriv order must be 1 or 2");
  double t = Angle::wrap(theta);
  if (auto* tr = std::get_if<Trig>(&data_)) {
    double acc = 0.0;
    for (std::size_t i = 0; i < tr->ak.size(); ++i) {
      double k = static_cast<double>(i + 1);
      double kt = k * t;
      if (order == 1) {
        acc += k * (tr->bk[i] * std::cos(kt) - tr->ak[i] * std::sin(kt));
      } else {
        acc -= k * k * (tr->ak[i] * std::cos(kt) + tr->bk[i] * std::sin(kt));
      }
    }
    return acc;
  }
  const Spline& s = std::get<Spline>(data_);
  std::size_t j = std::min(static_cast<std::size_t>(t / s.h), s.y.size() - 1);
  double u = t - static_cast<double>(j) * s.h;
  if (order == 1) return s.c1[j] + u * (s.mo[j] + u * 3.0 * s.c3[j]);
  return s.mo[j] + 6.0 * s.c3[j] * u;
}

void PeriodicFunction::eval_grid(double theta0, double step, std::size_t n, int order,
                                 double* out) const {
  if (order < 0 || order > 2) throw std::invalid_argument("eval_grid order must be 0, 1 or 2");
  if (auto* sp = std::get_if<Spline>(&data_)) {
    // Spline evaluation is already cheap per point; no recurrence needed.
    for (std::size_t j = 0; j < n; ++j) {
      double t = theta0 + static_cast<double>(j) * step;
      out[j] = order == 0 ? eval(t) : deriv(t, order);
    }
    (void)sp;
    return;
  }

  const Trig& tr = std::get<Trig>(data_);
  const std::size_t kk = tr.ak.size();
  std::vector<double> wc(kk), ws(kk);
  double w0 = 0.0;
  for (std::size_t i = 0; i < kk; ++i) {
    double k = static_cast<double>(i + 1);
    switch (order) {
      case 0: wc[i] = tr.ak[i]; ws[i] = tr.bk[i]; break;
      case 1: wc[i] = k * tr.bk[i]; ws[i] = -k * tr.ak[i]; break;
      default: wc[i] = -k * k * tr.ak[i]; ws[i] = -k * k * tr.bk[i]; break;
    }
  }
  if (order == 0) w0 = tr.a0;

  // Rotate a unit complex number along the grid and build harmonics as its
  // powers. Chunks are re-anchored with exact trig calls so rounding cannot
  // accumulate and results never depend on outer loop structure.
  constexpr std::size_t kChunk = 256;
  const double cw = std::cos(step), sw = std::sin(step);
  for (std::size_t j0 = 0; j0 < n; j0 += kChunk) {
    const std::size_t j1 = std::min(j0 + kChunk, n);
    double t0 = theta0 + static_cast<double>(j0) * step;
    double c = std::cos(t0), s = std::sin(t0);
    for (std::size_t j = j0; j < j1; ++j) {
      double acc = w0;
      double pr = c, pi = s;
      for (std::size_t i = 0; i < kk; ++i) {
        acc += wc[i] * pr + ws[i] * pi;
        double nr = pr * c - pi * s;
        pi = pr * s + pi * c;
        pr = nr;
      }
      out[j] = acc;
      double nc = c * cw - s * sw;
      s = c * sw + s * cw;
      c = nc;
    }
  }
}

void PeriodicFunction::compute_bounds() {
  if (auto* tr = std::get_if<Trig>(&data_)) {
    double lip = 0.0, sup = std::fabs(tr->a0);
    for (std::size_t i = 0; i < tr->ak.size(); ++i) {
      double mag = std::fabs(tr->ak[i]) + std::fabs(tr->bk[i]);
      lip += static_cast<double>(i + 1) * mag;
      sup += mag;
    }
    lipschitz_ = lip;
    sup_ = sup;
    return;
  }
  const Spline& s = std::get<Spline>(data_);
  const std::size_t n = std::max<std::size_t>(8192, 16 * s.y.size());
  const double step = kTau / static_cast<double>(n);
  std::vector<double> buf(n);
  eval_grid(0.0, step, n, 1, buf.data());
  double dmax = 0.0;
  for (double v : buf) dmax = std::max(dmax, std::fabs(v));
  eval_grid(0.0, step, n, 0, buf.data());
  double vmax = 0.0;
  for (double v : buf) vmax = std::max(vmax, std::fabs(v));
  lipschitz_ = dmax * 1.05;
  sup_ = vmax * 1.05;
}

PeriodicFunction PeriodicFunction::rotated(double beta) const {
  if (auto* tr = std::get_if<Trig>(&data_)) {
    std::vector<double> na(tr->ak.size()), nb(tr->bk.size());
    for (std::size_t i = 0; i < tr->ak.size(); ++i) {
      double kb = static_cast<double>(i + 1) * beta;
      double c = std::cos(kb), s = std::sin(kb);
      na[i] = tr->ak[i] * c + tr->bk[i] * s;
      nb[i] = -tr->ak[i] * s + tr->bk[i] * c;
    }
    return fourier(tr->a0, std::move(na), std::move(nb));
  }
  const Spline& s = std::get<Spline>(data_);
  const std::size_t m = s.y.size();
  double steps = Angle::wrap(beta) / s.h;
  double nearest = std::round(steps);
  std::vector<double> ny(m);
  if (std::fabs(steps - nearest) < 1e-12) {
    std::size_t shift = static_cast<std::size_t>(nearest) % m;
    for (std::size_t j = 0; j < m; ++j) ny[j] = s.y[(j + shift) % m];
  } else {
    for (std::size_t j = 0; j < m; ++j) ny[j] = eval(static_cast<double>(j) * s.h + beta);
  }
  return samples(std::move(ny));
}

PeriodicFunction PeriodicFunction::scaled(double c) const {
  if (!std::isfinite(c)) throw FunctionSpecError("scale factor is not finite");
  if (auto* tr = std::get_if<Trig>(&data_)) {
    std::vector<double> na = tr->ak, nb = tr->bk;
    for (double& x : na) x *= c;
    for (double& x : nb) x *= c;
    return fourier(tr->a0 * c, std::move(na), std::move(nb));
  }
  std::vector<double> ny = std::get<Spline>(data_).y;
  for (double& x : ny) x *= c;
  return samples(std::move(ny));
}

}  // namespace npd
