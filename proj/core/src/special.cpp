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

#include "slecft/special.hpp"

#include <cmath>
#include <string>

#include "slecft/errors.hpp"

namespace slecft {

double gamma_fn(double x) {
  if (x <= 0.0 && x == std::floor(x))
    throw DomainError("Gamma pole at argument " + std::to_string(x));
  return std::tgamma(x);
}

double c_alpha(double alpha) {
  return -2.0 * std::pow(kPi, 1.5) * gamma_fn((alpha - 1.0) / 2.0) *
         gamma_fn(1.5 * alpha - 1.0) /
         (std::pow(gamma_fn(alpha / 2.0), 2) * gamma_fn(alpha));
}

double c_hat(double alpha) {
  // Gamma(1 - alpha/2) sin(pi alpha/2) = pi / Gamma(alpha/2) removes the
  // poles at even alpha.
  return 4.0 * std::sin(kPi * alpha / 2.0) * std::sin(kPi * alpha) * kPi *
         gamma_fn(1.5 * alpha - 1.0) / (gamma_fn(alpha / 2.0) * gamma_fn(alpha));
}

double c_star(double a) {
  return 2.0 * gamma_fn(1.0 + 2.0 * a) / (std::sqrt(kPi) * gamma_fn(0.5 + 2.0 * a));
}

double c_tilde(const SLEParams& p, double rho) {
  if (!(rho > -2.0 && rho > p.kappa / 2.0 - 4.0))
    throw DomainError("c_tilde requires rho > max(-2, kappa/2 - 4)");
  const double a = p.a;
  return gamma_fn(6.0 * a + a * rho) /
         (2.0 * a * gamma_fn(2.0 * a) * gamma_fn(4.0 * a + a * rho));
}

double h_n(int n) {
  if (n < 2) throw DomainError("h_n requires n >= 2");
  const double g = gamma_fn(n / 2.0) * gamma_fn(n) / gamma_fn(1.5 * n - 1.0);
  if (n % 2 == 0) {
    const double in = (n / 2) % 2 == 0 ? 1.0 : -1.0;  // i^n
    return -in * g / (2.0 * kPi * kPi * kPi);
  }
  const double in1 = ((n + 1) / 2) % 2 == 0 ? 1.0 : -1.0;  // i^(n+1)
  return -in1 * g / (4.0 * kPi * kPi);
}

Constants constants(const SLEParams& p) {
  if (!(p.alpha > 1.0)) throw DomainError("constants require alpha > 1");
  Constants c;
  c.c_alpha = c_alpha(p.alpha);
  c.c_hat_vanishes = p.integer_alpha(1e-12).has_value();
  c.c_hat = c.c_hat_vanishes ? 0.0 : c_hat(p.alpha);
  c.c_star = c_star(p.a);
  return c;
}

}  // namespace slecft
