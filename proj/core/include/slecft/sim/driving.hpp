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

#include <cstdint>
#include <vector>

#include "slecft/params.hpp"
#include "slecft/sim/rng.hpp"

namespace slecft::sim {

/// Step-size policy. dt = c * min(m^2, gap^2, dt_max) / lambda, where m is
/// the distance from the nearest tracked point to a growing tip and lambda
/// the largest growth speed. dt_max sets the grid of a stored driving path;
/// it may be infinite when points or a force point bound the step.
struct StepPolicy {
  double c = 0.01;
  double dt_max = 1.0;
  /// Brownian-bridge halvings allowed when a step would close the gap.
  int max_refine = 30;
};

/// Coefficients of the coupled driving SDE
///   d xi^j = iota_j / (xi^j - xi^k) dt + sigma_j dB^j
/// together with the growth speeds lambda_j of the Loewner flow
///   dg = lambda_1 dt / (g - xi^1) + lambda_2 dt / (g - xi^2).
struct DrivingSpec {
  SLEParams params;
  double xi1 = 0.0;
  double xi2 = 0.0;
  bool force_point = false;
  double lambda1 = 0.0, lambda2 = 0.0;
  double iota1 = 0.0, iota2 = 0.0;
  double sigma1 = 0.0, sigma2 = 0.0;

  /// Single chordal SLE_kappa from xi1 with growth speed a.
  static DrivingSpec chordal(const SLEParams& p, double xi1 = 0.0);
  /// SLE_kappa(rho) from xi1 with force point xi2 != xi1; rho from p.rho.
  static DrivingSpec slekr(const SLEParams& p, double xi1, double xi2);
  /// Bichordal commuting system with speeds lambda_j (absolute units).
  static DrivingSpec bichordal(const SLEParams& p, double xi1, double xi2, double lambda1,
                               double lambda2);
};

/// Driving process sampled on its own adaptive grid. Between grid times the
/// driving is held at its left value, which defines the flow exactly.
struct DrivingPath {
  std::vector<double> times;
  std::vector<double> xi1;
  std::vector<double> xi2;  // empty without a force point
  std::uint64_t seed = 0;
  StepPolicy scheme;
  double lambda1 = 0.0, lambda2 = 0.0;
  double min_gap = 0.0;  // over recorded times; 0 without a force point
};

DrivingPath sample_driving_chordal(const SLEParams& p, double T, std::uint64_t seed,
                                   const StepPolicy& policy = {}, std::uint64_t index = 0);
DrivingPath sample_driving_slekr(const SLEParams& p, double xi1, double xi2, double T,
                                 std::uint64_t seed, const StepPolicy& policy = {},
                                 std::uint64_t index = 0);
DrivingPath sample_driving_bichordal(const SLEParams& p, double xi1, double xi2, double lambda1,
                                     double lambda2, double T, std::uint64_t seed,
                                     const StepPolicy& policy = {}, std::uint64_t index = 0);

/// Driving path for any spec, sampled up to time T.
DrivingPath sample_driving(const DrivingSpec& spec, double T, std::uint64_t seed,
                           const StepPolicy& policy = {}, std::uint64_t index = 0);

}  // namespace slecft::sim
