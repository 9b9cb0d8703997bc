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

namespace slecft {

/// SLE parameter bundle. Everything is derived from kappa (and rho):
/// a = 2/kappa, alpha = 8/kappa = 4a, beta = 4a - 1, d = 1 + kappa/8,
/// r = rho/kappa.
struct SLEParams {
  double kappa = 4.0;
  double a = 0.5;
  double alpha = 2.0;
  double beta = 1.0;
  double d = 1.5;
  double rho = 0.0;
  double r = 0.0;

  /// Throws DomainError unless 0 < kappa < 8.
  static SLEParams from_kappa(double kappa, double rho = 0.0);
  static SLEParams from_alpha(double alpha, double rho = 0.0);

  /// Observables (Schramm, Green) are defined for kappa <= 4 only.
  void require_observable_range() const;

  /// Nearest integer n if |alpha - n| <= tol.
  std::optional<int> integer_alpha(double tol = 1e-6) const;
};

/// Default tolerances for every quadrature in the library.
struct Tolerance {
  double rel = 1e-10;
  double abs = 1e-12;
  int max_intervals = 4000;
};

}  // namespace slecft
