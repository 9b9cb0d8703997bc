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

#include "slecft/complex_power.hpp"
#include "slecft/params.hpp"

namespace slecft {

/// Real Gamma function. Throws DomainError naming the argument at a pole.
double gamma_fn(double x);

/// Normalisation constants attached to kappa.
struct Constants {
  double c_alpha = 0.0;  // Schramm normalisation, -2 pi^2 at alpha = 2
  double c_hat = 0.0;    // Green normalisation, zero at integer alpha
  bool c_hat_vanishes = false;
  double c_star = 0.0;   // 2 / int_0^pi sin^{4a}
};

Constants constants(const SLEParams& p);

double c_alpha(double alpha);
double c_hat(double alpha);
double c_star(double a);
/// Requires rho > max(-2, kappa/2 - 4).
double c_tilde(const SLEParams& p, double rho);
/// h_n for integer n >= 2 (real).
double h_n(int n);

/// Principal branch of 2F1(a, b; c; w) on C minus [1, inf).
cplx gauss_2f1(double a, double b, double c, cplx w);

}  // namespace slecft
