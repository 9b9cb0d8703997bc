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

#include "slecft/green.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>

#include "slecft/errors.hpp"
#include "slecft/pde.hpp"
#include "slecft/special.hpp"

namespace slecft {
namespace {

// Half-width of the window around theta2 = pi/2 where sigma switches branch.
constexpr double kSeamWindow = 1e-10;
constexpr double kSeamOffset = 1e-9;
constexpr double kSeamAgreement = 1e-7;
constexpr double kBlendDisagreement = 1e-4;
// Below this theta2 - theta1 both direct evaluations of h lose accuracy (the
// roots z and xi2 merge relative to xi2 - xi1) and h is interpolated instead.
constexpr double kDiagonalBand = 1e-2;

void check_angles(AngleArgs th) {
  if (!(0.0 < th.theta1 && th.theta1 < th.theta2 && th.theta2 < kPi))
    throw DomainError("angles must satisfy 0 < theta1 < theta2 < pi");
}

void check_config(cplx z, double xi1, double xi2) {
  if (!(z.imag() > 0.0)) throw DomainError("green: z must lie in the upper half-plane");
  if (!(xi1 < xi2)) throw DomainError("green: requires xi1 < xi2");
}

// Dispatch between the generic (1/c_hat-normalised) evaluation and the
// integer-alpha continuation, blending linearly in the band
// kIntegerAlphaTol < |alpha - n| < kBlendBand.
GreenValue dispatch(const SLEParams& p, const std::function<double()>& generic,
                    const std::function<double(int)>& integer) {
  p.require_observable_range();
  const int n = static_cast<int>(std::lround(p.alpha));
  const double dist = std::abs(p.alpha - n);
  GreenValue out;
  if (dist <= kIntegerAlphaTol) {
    out.integer = out.value = integer(n);
    out.path = GreenPath::kInteger;
    return out;
  }
  if (dist >= kBlendBand) {
    out.generic = out.value = generic();
    out.path = GreenPath::kGeneric;
    return out;
  }
  out.generic = generic();
  out.integer = integer(n);
  const double lam = (dist - kIntegerAlphaTol) / (kBlendBand - kIntegerAlphaTol);
  out.value = lam * out.generic + (1.0 - lam) * out.integer;
  out.path = GreenPath::kBlended;
  if (std::abs(out.generic - out.integer) > kBlendDisagreement) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "near-integer alpha=" << p.alpha << ": generic " << out.generic
        << " vs integer " << out.integer;
    out.diagnostic = msg.str();
  }
  return out;
}

bool near_diagonal(AngleArgs th) {
  const double m = 0.5 * (th.theta1 + th.theta2);
  return th.theta2 - th.theta1 < kDiagonalBand && m > 2.0 * kDiagonalBand &&
         m < kPi - 2.0 * kDiagonalBand;
}

GreenValue fused_h_dispatch(double theta, const SLEParams& p, const Tolerance& tol);

// Cubic in delta = theta2 - theta1 at fixed midpoint through the diagonal
// value h_f and h at delta = 1, 2, 3 band widths. h is smooth across the
// diagonal and exact at delta = kDiagonalBand, so no jump is introduced.
GreenValue h_near_diagonal(AngleArgs th, const SLEParams& p, const Tolerance& tol,
                           const std::function<GreenValue(AngleArgs)>& direct) {
  const double m = 0.5 * (th.theta1 + th.theta2);
  const double d = th.theta2 - th.theta1;
  std::array<GreenValue, 4> v;
  v[0] = fused_h_dispatch(m, p, tol);
  for (int k = 1; k < 4; ++k) v[k] = direct({m - 0.5 * k * kDiagonalBand, m + 0.5 * k * kDiagonalBand});
  GreenValue out;
  out.path = v[1].path;
  for (int k = 0; k < 4; ++k) {
    double w = 1.0;
    for (int j = 0; j < 4; ++j)
      if (j != k) w *= (d - j * kDiagonalBand) / ((k - j) * kDiagonalBand);
    out.value += w * v[k].value;
    out.generic += w * v[k].generic;
    out.integer += w * v[k].integer;
    if (!out.diagnostic && v[k].diagnostic) out.diagnostic = v[k].diagnostic;
  }
  return out;
}

void require_generic_alpha(const SLEParams& p) {
  p.require_observable_range();
  if (p.integer_alpha(kIntegerAlphaTol))
    throw DomainError("alpha is within 1e-6 of an integer; use the integer continuation");
}

double generic_green(cplx z, double xi1, double xi2, const SLEParams& p, const Tolerance& tol) {
  const double al = p.alpha;
  const cplx I = pochhammer_I(z, xi1, xi2, p, tol).value;
  const double y = z.imag();
  const double pref = std::exp((al + 1.0 / al - 2.0) * std::log(y) +
                               (1.0 - al) * std::log(std::abs(z - xi1)) +
                               (1.0 - al) * std::log(std::abs(z - xi2)));
  return pref * (std::polar(1.0, -kPi * al) * I).imag() / c_hat(al);
}

// F(w1, w2) by the Pochhammer contour (0+, 1+, 0-, 1-) based at 1/2.
cplx pochhammer_F(cplx w1, cplx w2, double al, const Tolerance& tol) {
  const double r0 = 0.25 * std::min({0.5, std::abs(w1), std::abs(w2)});
  const double r1 = 0.25 * std::min({0.5, std::abs(1.0 - w1), std::abs(1.0 - w2)});
  const std::array<PowerFactor, 4> factors = {{
      {0.0, al - 1.0},
      {w1, al - 1.0},
      {w2, -al / 2.0},
      {1.0, -al / 2.0, -1},
  }};
  const ContourPath path = ContourPath::pochhammer(0.5, 0.0, r0, 1.0, r1);
  ContourOptions opts;
  opts.tol = tol;
  return integrate_contour(factors, path, opts).value;
}

double h_angles_raw(AngleArgs th, double al, const Tolerance& tol) {
  const double t1 = th.theta1, t2 = th.theta2;
  const cplx w1 = 1.0 - std::polar(1.0, -2.0 * t2);
  const cplx w2 = (std::sin(t2) / std::sin(t1)) * std::polar(1.0, -(t2 - t1));
  const cplx sigma = std::polar(1.0, t2 >= kPi / 2.0 ? -kPi * al : kPi * al);
  const cplx lead = principal_pow(-std::polar(1.0, t2), al - 1.0);
  const cplx F = pochhammer_F(w1, w2, al, tol);
  return std::pow(std::sin(t1), al - 1.0) / c_hat(al) * (sigma * lead * F).imag();
}

double fused_h_generic(double theta, double al) {
  const cplx w(0.5, -0.5 / std::tan(theta));
  const cplx F = gauss_2f1(1.0 - al, al, 1.0, w);
  return kPi * std::pow(2.0, al + 1.0) / c_hat(al) * std::sin(kPi * al / 2.0) *
         std::pow(std::sin(theta), 2.0 * al - 2.0) *
         (std::polar(1.0, -0.5 * kPi * al) * F).real();
}

GreenValue fused_h_dispatch(double theta, const SLEParams& p, const Tolerance& tol) {
  return dispatch(
      p, [&] { return fused_h_generic(theta, p.alpha); },
      [&](int n) { return fused_h_integer(theta, n, tol); });
}

}  // namespace

AngleArgs angles_of(cplx z, double xi1, double xi2) {
  return {std::arg(z - xi1), std::arg(z - xi2)};
}

ContourResult pochhammer_I(cplx z, double xi1, double xi2, const SLEParams& p,
                           const Tolerance& tol, double radius_scale) {
  check_config(z, xi1, xi2);
  require_generic_alpha(p);
  const double al = p.alpha;
  const cplx A = 0.5 * (z + xi2);
  const double r = 0.25 * radius_scale *
                   std::min({std::abs(A - z), std::abs(A - xi2), z.imag(), 0.5 * (xi2 - xi1)});
  const std::array<PowerFactor, 4> factors = {{
      {z, al - 1.0},
      {std::conj(z), al - 1.0},
      {xi1, -al / 2.0},
      {xi2, -al / 2.0, -1},
  }};
  const ContourPath path = ContourPath::pochhammer(A, z, r, xi2, r);
  ContourOptions opts;
  opts.tol = tol;
  return integrate_contour(factors, path, opts);
}

GreenValue green_G_eval(cplx z, double xi1, double xi2, const SLEParams& p,
                        const Tolerance& tol) {
  check_config(z, xi1, xi2);
  if (const AngleArgs th = angles_of(z, xi1, xi2); near_diagonal(th)) {
    GreenValue v = h_eval(th, p, tol);
    const double s = std::pow(z.imag(), p.d - 2.0);
    v.value *= s;
    v.generic *= s;
    v.integer *= s;
    return v;
  }
  return dispatch(
      p, [&] { return generic_green(z, xi1, xi2, p, tol); },
      [&](int n) {
        return std::pow(z.imag(), p.d - 2.0) * h_integer(angles_of(z, xi1, xi2), n, tol);
      });
}

double green_G(cplx z, double xi1, double xi2, const SLEParams& p, const Tolerance& tol) {
  return green_G_eval(z, xi1, xi2, p, tol).value;
}

double h_angles(AngleArgs th, const SLEParams& p, const Tolerance& tol) {
  check_angles(th);
  require_generic_alpha(p);
  if (std::abs(th.theta2 - kPi / 2.0) < kSeamWindow) {
    const double lo = h_angles_raw({th.theta1, kPi / 2.0 - kSeamOffset}, p.alpha, tol);
    const double hi = h_angles_raw({th.theta1, kPi / 2.0 + kSeamOffset}, p.alpha, tol);
    if (std::abs(lo - hi) > kSeamAgreement)
      throw NumericError("h_angles: branch seam at theta2 = pi/2 does not close");
    return 0.5 * (lo + hi);
  }
  return h_angles_raw(th, p.alpha, tol);
}

GreenValue h_eval(AngleArgs th, const SLEParams& p, const Tolerance& tol) {
  check_angles(th);
  auto direct = [&](AngleArgs a) {
    return dispatch(
        p, [&] { return h_angles(a, p, tol); }, [&](int n) { return h_integer(a, n, tol); });
  };
  if (near_diagonal(th)) return h_near_diagonal(th, p, tol, direct);
  return direct(th);
}

double h_value(AngleArgs th, const SLEParams& p, const Tolerance& tol) {
  return h_eval(th, p, tol).value;
}

double fused_h_hypergeometric(double theta, double alpha) {
  if (!(0.0 < theta && theta < kPi)) throw DomainError("fused_h: theta must lie in (0, pi)");
  if (!(alpha > 1.0)) throw DomainError("fused_h: alpha must exceed 1");
  if (std::abs(alpha - std::round(alpha)) <= kIntegerAlphaTol)
    throw DomainError("alpha is within 1e-6 of an integer; use the integer continuation");
  return fused_h_generic(theta, alpha);
}

GreenValue fused_h_eval(double theta, const SLEParams& p, const Tolerance& tol) {
  if (!(0.0 < theta && theta < kPi)) throw DomainError("fused_h: theta must lie in (0, pi)");
  return fused_h_dispatch(theta, p, tol);
}

double fused_h(double theta, const SLEParams& p, const Tolerance& tol) {
  return fused_h_eval(theta, p, tol).value;
}

double bichordal_green(cplx z, double xi1, double xi2, const SLEParams& p,
                       const Tolerance& tol) {
  if (!(z.imag() > 0.0)) throw DomainError("bichordal_green: z must lie in the upper half-plane");
  if (xi1 > xi2) throw DomainError("bichordal_green: requires xi1 <= xi2");
  const double xi = 0.5 * (xi2 - xi1);
  const cplx w = z - 0.5 * (xi1 + xi2);
  const cplx wm = -std::conj(w);
  if (xi == 0.0) {
    const double s = std::pow(w.imag(), p.d - 2.0);
    return s * (fused_h(std::arg(w), p, tol) + fused_h(std::arg(wm), p, tol));
  }
  return green_G(w, -xi, xi, p, tol) + green_G(wm, -xi, xi, p, tol);
}

double chordal_green(cplx z, const SLEParams& p) {
  if (!(z.imag() > 0.0)) throw DomainError("chordal_green: z must lie in the upper half-plane");
  return std::pow(z.imag(), p.d - 2.0) * std::pow(std::sin(std::arg(z)), p.beta);
}

PDEResidual pde_residual_green(cplx z, double xi1, double xi2, const SLEParams& p,
                               double step, const Tolerance& tol) {
  auto G = [&](double x, double y, double a, double b) {
    return green_G(cplx(x, y), a, b, p, tol);
  };
  return apply_pde_operators(G, z.real(), z.imag(), xi1, xi2, p.alpha, step, PDEKind::kGreen);
}

}  // namespace slecft
