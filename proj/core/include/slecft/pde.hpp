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

#include <functional>

#include "slecft/schramm.hpp"

namespace slecft {

/// A function of (x, y, xi1, xi2).
using FourPointFunction = std::function<double(double, double, double, double)>;

enum class PDEKind {
  kSchramm,  // A_j f = 0
  kGreen,    // (A_j + 2(alpha-1)(y^2 - (x-xi_j)^2) / (alpha D_j^2)) f = 0
};

/// Applies both operators to `f` at (x, y, xi1, xi2) with second-order
/// central differences of spacing `step` (nine evaluations of f). Throws
/// GeometryError if the stencil leaves {y > 0, xi1 < xi2}.
PDEResidual apply_pde_operators(const FourPointFunction& f, double x, double y, double xi1,
                                double xi2, double alpha, double step, PDEKind kind);

}  // namespace slecft
