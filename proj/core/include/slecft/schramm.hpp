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

#include "slecft/complex_power.hpp"
#include "slecft/params.hpp"
#include "slecft/quadrature.hpp"

namespace slecft {

/// Probabilities that z lies left of, between, or right of the two curves of
/// a bichordal system. `left` and `right` are the raw (unclamped) values, so
/// the three always sum to one up to rounding.
struct PassageSplit {
  double left = 0.0;
  double middle = 0.0;
  double right = 0.0;
};

/// Value of a probability observable. `value` is clamped to [0, 1] for
/// reporting; `raw` is the unclamped quadrature result.
struct Probability {
  double value = 0.0;
  double raw = 0.0;
  double abs_error = 0.0;
};

/// Central finite-difference residuals of the two operators A_1, A_2.
struct PDEResidual {
  double residual_1 = 0.0;
  double residual_2 = 0.0;
  double step = 0.0;
};

/// J(z, xi): contour integral from conj(z) to z of
/// (u-z)^alpha (u-conj z)^(alpha-2) u^(-alpha/2) (u-xi)^(-alpha/2), along the
/// polyline conj(z) -> c -> z with c = max(Re z, xi) + Im z. Any c > xi
/// gives the same value and may be passed explicitly. When z lies far to
/// the left (-Re z > max(Im z, xi)) and no crossing is given, a chord path
/// around a circle centred at xi/2 is used instead.
QuadResult schramm_J(cplx z, double xi, const SLEParams& p,
                     std::optional<double> crossing = std::nullopt,
                     const Tolerance& tol = {});

/// M(z, xi), the integrand of the left-passage probability.
cplx schramm_integrand(cplx z, double xi, const SLEParams& p, const Tolerance& tol = {});

/// Probability that z lies to the left of an SLE_kappa(2) curve started from
/// 0 with force point xi > 0. Very small xi / |z| is routed to the fused
/// formula.
Probability schramm_probability(cplx z, double xi, const SLEParams& p,
                                const Tolerance& tol = {});

/// Closed form of the left-passage probability at kappa = 4.
double schramm_kappa4(cplx z, double xi);

/// Probability that z lies to the left of a single chordal SLE_kappa from 0,
/// for any 0 < kappa < 8 (equals arg(z)/pi at kappa = 4).
double chordal_left_passage(cplx z, const SLEParams& p);

/// Left/middle/right split for a bichordal system started from xi1 < xi2.
PassageSplit passage_split(cplx z, double xi1, double xi2, const SLEParams& p,
                           const Tolerance& tol = {});

/// The real kernel S(t) of the fused left-passage probability.
double fused_schramm_kernel(double t, const SLEParams& p);

/// Left-passage probability for the fused start (0, 0+).
Probability fused_schramm(cplx z, const SLEParams& p, const Tolerance& tol = {});

/// A_j applied by central differences of spacing `step` to
/// P~(x, y, xi1, xi2) = P(x - xi1 + iy, xi2 - xi1).
PDEResidual pde_residual_schramm(cplx z, double xi1, double xi2, const SLEParams& p,
                                 double step, const Tolerance& tol = {});

}  // namespace slecft
