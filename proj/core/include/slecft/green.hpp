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

#pragma once

#include <optional>
#include <string>

#include "slecft/complex_power.hpp"
#include "slecft/contour.hpp"
#include "slecft/params.hpp"
#include "slecft/schramm.hpp"

namespace slecft {

/// theta1 = arg(z - xi1), theta2 = arg(z - xi2); 0 < theta1 < theta2 < pi.
struct AngleArgs {
  double theta1 = 0.0;
  double theta2 = 0.0;
};

AngleArgs angles_of(cplx z, double xi1, double xi2);

/// First two coefficients of F = (alpha-n) F1 + (alpha-n)^2 F2 + ... at an
/// integer alpha = n.
struct ContinuationData {
  cplx F1{0.0, 0.0};
  cplx F2{0.0, 0.0};  // only defined for even n
  int n = 0;
};

/// Where a Green-type value came from.
enum class GreenPath {
  kGeneric,  // contour integral with 1/c_hat normalisation
  kInteger,  // integer-alpha continuation
  kBlended,  // linear blend of both in the near-integer band
};

/// Value plus provenance. In the near-integer band both evaluations are
/// kept; `diagnostic` is set when they disagree by more than 1e-4.
struct GreenValue {
  double value = 0.0;
  GreenPath path = GreenPath::kGeneric;
  double generic = 0.0;
  double integer = 0.0;
  std::optional<std::string> diagnostic;
};

/// Integer-alpha detection threshold and the upper edge of the blend band.
inline constexpr double kIntegerAlphaTol = 1e-6;
inline constexpr double kBlendBand = 1e-3;

/// The Pochhammer integral I(z, xi1, xi2) based at A = (z + xi2)/2, loops
/// (z+, xi2+, z-, xi2-). Requires |alpha - round(alpha)| > 1e-6.
ContourResult pochhammer_I(cplx z, double xi1, double xi2, const SLEParams& p,
                           const Tolerance& tol = {}, double radius_scale = 1.0);

/// The SLE_kappa(2) Green's function G(z, xi1, xi2).
GreenValue green_G_eval(cplx z, double xi1, double xi2, const SLEParams& p,
                        const Tolerance& tol = {});
double green_G(cplx z, double xi1, double xi2, const SLEParams& p, const Tolerance& tol = {});

/// h(theta1, theta2) from the Pochhammer representation around 0 and 1.
/// Requires non-integer alpha (|alpha - n| > 1e-6).
double h_angles(AngleArgs th, const SLEParams& p, const Tolerance& tol = {});

/// h(theta1, theta2) at integer alpha = n >= 2.
double h_integer(AngleArgs th, int n, const Tolerance& tol = {});
ContinuationData continuation_data(AngleArgs th, int n, const Tolerance& tol = {});

/// h for any alpha >= 2, dispatching between h_angles and h_integer.
GreenValue h_eval(AngleArgs th, const SLEParams& p, const Tolerance& tol = {});
double h_value(AngleArgs th, const SLEParams& p, const Tolerance& tol = {});

/// Explicit h at kappa = 4, 8/3, 2. Any other kappa is a DomainError.
double h_closed_form(AngleArgs th, double kappa);

/// Fused function h_f(theta), the diagonal limit of h.
GreenValue fused_h_eval(double theta, const SLEParams& p, const Tolerance& tol = {});
double fused_h(double theta, const SLEParams& p, const Tolerance& tol = {});
/// h_f from its hypergeometric representation at any non-integer alpha > 1,
/// without the observable-range check (used for extrapolation to integers).
double fused_h_hypergeometric(double theta, double alpha);
/// Integer-alpha h_f via the residue and contour coefficients Y1, Y2.
double fused_h_integer(double theta, int n, const Tolerance& tol = {});
/// Explicit h_f at kappa = 4, 8/3, 2.
double fused_h_closed_form(double theta, double kappa);

/// Green's function of the commuting pair started from xi1 <= xi2 (the fused
/// pair when xi1 == xi2).
double bichordal_green(cplx z, double xi1, double xi2, const SLEParams& p,
                       const Tolerance& tol = {});

/// Chordal SLE_kappa Green's function (Im z)^(d-2) sin^beta(arg z).
double chordal_green(cplx z, const SLEParams& p);

PDEResidual pde_residual_green(cplx z, double xi1, double xi2, const SLEParams& p,
                               double step, const Tolerance& tol = {});

}  // namespace slecft
