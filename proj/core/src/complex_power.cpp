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

#include "slecft/complex_power.hpp"

#include <cmath>

#include "slecft/errors.hpp"
#include "slecft/params.hpp"

namespace slecft {

double principal_arg(cplx z) {
  if (z.imag() == 0.0 && z.real() < 0.0) return kPi;
  return std::atan2(z.imag(), z.real());
}

cplx principal_log(cplx z) { return {std::log(std::abs(z)), principal_arg(z)}; }

cplx principal_pow(cplx base, double exponent) {
  if (base == cplx(0.0, 0.0)) {
    if (exponent > 0.0) return {0.0, 0.0};
    if (exponent == 0.0) return {1.0, 0.0};
    throw DomainError("principal_pow: zero base with negative exponent");
  }
  const double mod = std::pow(std::abs(base), exponent);
  const double ph = exponent * principal_arg(base);
  return {mod * std::cos(ph), mod * std::sin(ph)};
}

SLEParams SLEParams::from_kappa(double kappa, double rho) {
  if (!(kappa > 0.0 && kappa < 8.0))
    throw DomainError("kappa must lie in (0, 8)");
  SLEParams p;
  p.kappa = kappa;
  p.a = 2.0 / kappa;
  p.alpha = 8.0 / kappa;
  p.beta = 4.0 * p.a - 1.0;
  p.d = 1.0 + kappa / 8.0;
  p.rho = rho;
  p.r = rho / kappa;
  return p;
}

SLEParams SLEParams::from_alpha(double alpha, double rho) {
  if (!(alpha > 1.0)) throw DomainError("alpha must exceed 1");
  SLEParams p = from_kappa(8.0 / alpha, rho);
  // Keep alpha exact; 8/(8/alpha) can be off by an ulp.
  p.alpha = alpha;
  p.a = alpha / 4.0;
  p.beta = alpha - 1.0;
  return p;
}

void SLEParams::require_observable_range() const {
  if (alpha < 2.0 - 1e-12)
    throw DomainError("observables require kappa <= 4 (alpha >= 2)");
}

std::optional<int> SLEParams::integer_alpha(double tol) const {
  const double n = std::round(alpha);
  if (std::abs(alpha - n) <= tol) return static_cast<int>(n);
  return std::nullopt;
}

}  // namespace slecft
