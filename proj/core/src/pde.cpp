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

#include "slecft/pde.hpp"

#include "slecft/errors.hpp"

namespace slecft {

PDEResidual apply_pde_operators(const FourPointFunction& f, double x, double y, double xi1,
                                double xi2, double alpha, double step, PDEKind kind) {
  const double h = step;
  if (!(h > 0.0)) throw DomainError("PDE stencil: step must be positive");
  if (!(y - h > 0.0) || !(xi1 + h < xi2 - h))
    throw GeometryError("PDE stencil leaves the domain {y > 0, xi1 < xi2}");

  const double f0 = f(x, y, xi1, xi2);
  const double fxp = f(x + h, y, xi1, xi2), fxm = f(x - h, y, xi1, xi2);
  const double fyp = f(x, y + h, xi1, xi2), fym = f(x, y - h, xi1, xi2);
  const double f1p = f(x, y, xi1 + h, xi2), f1m = f(x, y, xi1 - h, xi2);
  const double f2p = f(x, y, xi1, xi2 + h), f2m = f(x, y, xi1, xi2 - h);

  const double dx = (fxp - fxm) / (2.0 * h);
  const double dy = (fyp - fym) / (2.0 * h);
  const double d1 = (f1p - f1m) / (2.0 * h);
  const double d2 = (f2p - f2m) / (2.0 * h);
  const double d11 = (f1p - 2.0 * f0 + f1m) / (h * h);
  const double d22 = (f2p - 2.0 * f0 + f2m) / (h * h);
  const double drift = 2.0 / (xi1 - xi2) * d1 + 2.0 / (xi2 - xi1) * d2;

  auto apply = [&](double xij, double second) {
    const double u = x - xij;
    const double D = y * y + u * u;
    double r = 4.0 / alpha * second + 2.0 * u / D * dx - 2.0 * y / D * dy + drift;
    if (kind == PDEKind::kGreen)
      r += 2.0 * (alpha - 1.0) * (y * y - u * u) / (alpha * D * D) * f0;
    return r;
  };
  return {apply(xi1, d11), apply(xi2, d22), h};
}

}  // namespace slecft
