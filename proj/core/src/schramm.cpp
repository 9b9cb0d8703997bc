// Copyright 2026 The slecft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "slecft/schramm.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "slecft/contour.hpp"
#include "slecft/errors.hpp"
#include "slecft/pde.hpp"
#include "slecft/special.hpp"

namespace slecft {
namespace {

// Below this ratio xi / |z| the two roots 0 and xi are treated as fused.
constexpr double kFusionRatio = 1e-6;

void check_point(cplx z, double xi, const SLEParams& p) {
  p.require_observable_range();
  if (!(z.imag() > 0.0)) throw DomainError("schramm: z must lie in the upper half-plane");
  if (!(xi > 0.0)) throw DomainError("schramm: xi must be positive");
}

Probability make_probability(double raw, double err) {
  return {std::clamp(raw, 0.0, 1.0), raw, err};
}

// Integral over [t0, inf) by t = t0 + scale s/(1-s), tanh-sinh in s. Nodes
// beyond t0 + 1e15 scale are dropped; every integrand here decays at least
// like t^-2, so they carry less than 1e-15 relative weight.
RealQuadResult integrate_tail(const std::function<double(double)>& g, double t0, double scale,
                              const Tolerance& tol) {
  auto h = [&](cplx sc) {
    const double s = sc.real();
    const double om = 1.0 - s;
    if (om * 1e15 <= s) return cplx(0.0, 0.0);
    return cplx(g(t0 + scale * s / om) * scale / (om * om), 0.0);
  };
  const QuadResult q = integrate_segment(h, 0.0, 1.0, tol);
  RealQuadResult r;
  r.value = q.value.real();
  r.abs_error_estimate = q.abs_error_estimate;
  r.evaluations = q.evaluations;
  return r;
}

double fused_constant(double al) {
  return gamma_fn(al / 2.0) * gamma_fn(al) /
         (std::pow(2.0, 2.0 - al) * kPi * gamma_fn(1.5 * al - 1.0));
}

}  // namespace

QuadResult schramm_J(cplx z, double xi, const SLEParams& p, std::optional<double> crossing,
                     const Tolerance& tol) {
  check_point(z, xi, p);
  const double al = p.alpha;
  const std::array<PowerFactor, 4> factors = {{
      {z, al},
      {std::conj(z), al - 2.0},
      {0.0, -al / 2.0},
      {xi, -al / 2.0},
  }};
  ContourPath path(std::conj(z));
  const double x = z.real(), y = z.imag();
  const bool far_left = -x > std::max(y, xi);
  if (!crossing && x < xi && !far_left) {
    // Left of xi the polyline runs within ~y of 0 and xi, and close to the
    // axis the quadrature stalls on rounding. Leave the axis first and cross
    // at distance Y from both roots.
    const double Y = 2.0 * std::max(std::abs(z), xi);
    const double c = std::max(x, xi) + Y;
    path.line_to(cplx(x, -Y)).line_to(cplx(c, -Y)).line_to(cplx(c, Y)).line_to(cplx(x, Y)).line_to(z);
  } else if (crossing || !far_left) {
    const double c = crossing.value_or(std::max(z.real(), xi) + z.imag());
    if (!(c > xi))
      throw GeometryError("schramm_J: the contour must cross the axis right of xi");
    path.line_to(c).line_to(z);
  } else {
    // Far left of both roots the polyline through max(x, xi) + y runs close
    // to 0 and xi, where the integrand is large and J is the sum of heavily
    // cancelling pieces. Go around on chords of the circle through z and
    // conj(z) centred at xi/2 instead.
    const cplx q(0.5 * xi, 0.0);
    const double R = std::abs(z - q);
    const double th = std::arg(z - q);
    constexpr int kChords = 8;
    for (int k = 1; k < kChords; ++k)
      path.line_to(q + std::polar(R, -th + 2.0 * th * k / kChords));
    path.line_to(z);
  }
  ContourOptions opts;
  opts.tol = tol;
  return integrate_contour(factors, path, opts);
}

cplx schramm_integrand(cplx z, double xi, const SLEParams& p, const Tolerance& tol) {
  const double al = p.alpha;
  const cplx J = schramm_J(z, xi, p, std::nullopt, tol).value;
  const cplx zb = std::conj(z);
  const cplx lg = (al - 2.0) * std::log(z.imag()) - 0.5 * al * principal_log(z) -
                  0.5 * al * principal_log(z - xi) + (1.0 - 0.5 * al) * principal_log(zb) +
                  (1.0 - 0.5 * al) * principal_log(zb - xi);
  return std::exp(lg) * J;
}

Probability schramm_probability(cplx z, double xi, const SLEParams& p, const Tolerance& tol) {
  check_point(z, xi, p);
  if (xi < kFusionRatio * std::abs(z)) return fused_schramm(z, p, tol);
  const double y = z.imag();
  const double ca = c_alpha(p.alpha);
  const double K = fused_constant(p.alpha);
  // Far out along the line xi is negligible against |z'| and M is replaced by
  // its fused limit c_alpha K S(x'/y) / y.
  auto re_m = [&](double xp) {
    const cplx zp(xp, y);
    if (xi < kFusionRatio * std::abs(zp)) return ca * K * fused_schramm_kernel(xp / y, p) / y;
    return schramm_integrand(zp, xi, p, tol).real();
  };
  const double x = z.real();
  // Re M has features of width y around 0 and xi; split there.
  double total = 0.0, err = 0.0, lo = x;
  for (double b : {0.0, xi}) {
    if (!(b > lo)) continue;
    const RealQuadResult r = integrate_real(re_m, lo, b, tol);
    total += r.value;
    err += r.abs_error_estimate;
    lo = b;
  }
  const RealQuadResult r = integrate_tail(re_m, lo, y, tol);
  return make_probability((total + r.value) / ca, (err + r.abs_error_estimate) / std::abs(ca));
}

double schramm_kappa4(cplx z, double xi) {
  if (!(z.imag() > 0.0)) throw DomainError("schramm_kappa4: z must lie in the upper half-plane");
  if (!(xi > 0.0)) throw DomainError("schramm_kappa4: xi must be positive");
  const double x = z.real(), y = z.imag();
  const double pi = kPi;
  const double a1 = std::atan(x / y);
  const double a2 = std::atan((x - xi) / y);
  return (-2.0 * a1 * (pi * xi - 2.0 * xi * a2 + 2.0 * y) + pi * pi * xi +
          (4.0 * y - 2.0 * pi * xi) * a2) /
         (4.0 * pi * pi * xi);
}

double chordal_left_passage(cplx z, const SLEParams& p) {
  if (!(z.imag() > 0.0)) throw DomainError("chordal_left_passage: z must lie in the upper half-plane");
  const double k = p.kappa;
  const double t = z.real() / z.imag();
  const double c = gamma_fn(4.0 / k) / (std::sqrt(kPi) * gamma_fn((8.0 - k) / (2.0 * k)));
  return 0.5 - c * t * gauss_2f1(0.5, 4.0 / k, 1.5, cplx(-t * t, 0.0)).real();
}

PassageSplit passage_split(cplx z, double xi1, double xi2, const SLEParams& p,
                           const Tolerance& tol) {
  if (!(xi1 < xi2)) throw DomainError("passage_split: requires xi1 < xi2");
  const double gap = xi2 - xi1;
  PassageSplit s;
  s.left = schramm_probability(z - xi1, gap, p, tol).raw;
  s.right = schramm_probability(-std::conj(z) + xi2, gap, p, tol).raw;
  s.middle = 1.0 - s.left - s.right;
  return s;
}

double fused_schramm_kernel(double t, const SLEParams& p) {
  const double al = p.alpha;
  const double coef = 2.0 * gamma_fn(1.0 + al / 2.0) * gamma_fn(al / 2.0) /
                      (gamma_fn(0.5 + al / 2.0) * gamma_fn(al / 2.0 - 0.5));
  const cplx w(-t * t, 0.0);
  const double f1 = gauss_2f1(0.5 + al / 2.0, 1.0 - al / 2.0, 0.5, w).real();
  const double f2 = gauss_2f1(1.0 + al / 2.0, 1.5 - al / 2.0, 1.5, w).real();
  return std::pow(1.0 + t * t, 1.0 - al) * (f1 - coef * t * f2);
}

Probability fused_schramm(cplx z, const SLEParams& p, const Tolerance& tol) {
  p.require_observable_range();
  if (!(z.imag() > 0.0)) throw DomainError("fused_schramm: z must lie in the upper half-plane");
  const double K = fused_constant(p.alpha);
  const double t0 = z.real() / z.imag();
  if (t0 < -1.0) {
    // K S integrates to one over the line, so P_f = 1 - K int_{-inf}^{t0} S.
    auto S = [&](double u) { return fused_schramm_kernel(-u, p); };
    const RealQuadResult r = integrate_tail(S, -t0, -t0, tol);
    return make_probability(1.0 - K * r.value, K * r.abs_error_estimate);
  }
  auto S = [&](double t) { return fused_schramm_kernel(t, p); };
  const RealQuadResult r = integrate_tail(S, t0, std::max(1.0, t0), tol);
  return make_probability(K * r.value, K * r.abs_error_estimate);
}

PDEResidual pde_residual_schramm(cplx z, double xi1, double xi2, const SLEParams& p,
                                 double step, const Tolerance& tol) {
  auto P = [&](double x, double y, double a, double b) {
    return schramm_probability(cplx(x - a, y), b - a, p, tol).raw;
  };
  return apply_pde_operators(P, z.real(), z.imag(), xi1, xi2, p.alpha, step,
                             PDEKind::kSchramm);
}

}  // namespace slecft
