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

#include <cstddef>
#include <functional>

#include "slecft/complex_power.hpp"
#include "slecft/params.hpp"

namespace slecft {

struct QuadResult {
  cplx value{0.0, 0.0};
  double abs_error_estimate = 0.0;
  long evaluations = 0;
};

struct RealQuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
};

using ComplexIntegrand = std::function<cplx(cplx)>;

/// Straight segment p -> q by tanh-sinh; tolerates algebraic endpoint
/// singularities with exponent > -1. Throws AccuracyError when the level
/// limit is reached before the tolerance.
QuadResult integrate_segment(const ComplexIntegrand& f, cplx p, cplx q,
                             const Tolerance& tol = {});

/// Straight segment p -> q by globally adaptive Gauss-Kronrod (10/21).
QuadResult integrate_segment_gk(const ComplexIntegrand& f, cplx p, cplx q,
                                const Tolerance& tol = {});

/// Real integral over [lo, hi] by globally adaptive Gauss-Kronrod.
RealQuadResult integrate_real(const std::function<double(double)>& f, double lo,
                              double hi, const Tolerance& tol = {});

/// Globally adaptive Gauss-Kronrod over several unit panels at once.
/// `panel(k, t)` returns the integrand of panel k at t in [0, 1], Jacobian
/// included. The error budget is shared across panels.
QuadResult integrate_panels(const std::function<cplx(std::size_t, double)>& panel,
                            std::size_t panels, const Tolerance& tol);

}  // namespace slecft
