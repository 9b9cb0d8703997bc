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


// Exact maps for one step of the Loewner flow with the driving held fixed.

#pragma once

#include <cmath>
#include <complex>

namespace slecft::sim::detail {

/// Vertical slit map w -> sqrt(w^2 + 2 lambda dt) about xi, root in the upper
/// half-plane. Adds log|dZ_new/dZ| to log_gp.
inline std::complex<double> slit_map(std::complex<double> Z, double xi, double two_lambda_dt,
                                     double& log_gp) {
  const std::complex<double> w = Z - xi;
  std::complex<double> wn = std::sqrt(w * w + two_lambda_dt);
  if (wn.imag() < 0.0) wn = -wn;
  log_gp += 0.5 * std::log(std::norm(w) / std::norm(wn));
  return xi + wn;
}

/// The same map on the real line (boundary points flow away from xi).
inline double slit_real(double x, double xi, double two_lambda_dt) {
  const double u = x - xi;
  return xi + std::copysign(std::sqrt(u * u + two_lambda_dt), u);
}

/// Point flow over one step of the two-tip flow: tip 1 at xi1 grows for
/// lambda1 dt, then tip 2 at the image of xi2 grows for lambda2 dt.
inline std::complex<double> flow_point(std::complex<double> Z, double& log_gp, double xi1,
                                       double xi2_mid, double l1dt, double l2dt) {
  if (l1dt > 0.0) Z = slit_map(Z, xi1, 2.0 * l1dt, log_gp);
  if (l2dt > 0.0) Z = slit_map(Z, xi2_mid, 2.0 * l2dt, log_gp);
  return Z;
}

}  // namespace slecft::sim::detail
