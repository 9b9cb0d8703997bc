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
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "slecft/complex_power.hpp"
#include "slecft/params.hpp"
#include "slecft/sim/driving.hpp"
#include "slecft/sim/tracking.hpp"

namespace slecft::sim {

/// Monte Carlo point estimate. Reproducible bit-for-bit from (seed, config),
/// independent of the thread count.
struct EstimatorResult {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t n_failed = 0;  // samples discarded or unterminated
  std::vector<std::string> warnings;
};

struct MCSettings {
  std::uint64_t n_samples = 10000;
  std::uint64_t seed = 0;
  int threads = 1;
  /// Scale-free by default: steps are bounded only by point and gap distances.
  StepPolicy policy{0.01, std::numeric_limits<double>::infinity()};
};

/// Runs body(i) for i in [0, n) on `threads` workers. Each index is handled
/// exactly once; callers store per-sample results by index and reduce them
/// in index order afterwards.
void for_each_sample(std::uint64_t n, int threads, const std::function<void(std::uint64_t)>& body);

struct LeftPassageConfig {
  DrivingSpec driving;
  cplx z{0.0, 1.0};
  int angle_n = 100;
  double t_max = 1e8;
};

/// Fraction of samples in which z ends up left of the (first) curve:
/// tracks stop when sin(theta1) <= 1/n, left iff theta1 > pi/2.
EstimatorResult estimate_left_passage(const LeftPassageConfig& cfg, const MCSettings& mc);

struct GreenRatioConfig {
  DrivingSpec driving;
  cplx z1{0.0, 1.0};
  cplx z2{0.0, 2.0};
  double eps = 0.05;
  /// Angle at which a point counts as passed and is no longer watched.
  int angle_n = 1000;
  double t_max = 1e8;
};

struct GreenRatioResult {
  EstimatorResult ratio;
  double p1 = 0.0;  // hit frequency at z1
  double p2 = 0.0;  // hit frequency at z2
};

/// Ratio P(Upsilon(z1) <= eps) / P(Upsilon(z2) <= eps), both points tracked
/// along the same curves, with a delta-method standard error.
GreenRatioResult estimate_green_ratio(const GreenRatioConfig& cfg, const MCSettings& mc);

enum class MartingaleKind { kSchramm, kGreen };

struct MartingaleConfig {
  MartingaleKind kind = MartingaleKind::kSchramm;
  DrivingSpec driving;  // SLE_kappa(2) from (xi1, xi2)
  cplx z{0.0, 1.0};
  std::vector<double> checkpoints{0.1, 0.3, 1.0};
  /// Green observable: freeze the point once Upsilon <= eps_stop.
  double eps_stop = 0.05;
  Tolerance tol{1e-8, 1e-10, 4000};
};

struct MartingaleResult {
  double initial = 0.0;                   // observable at t = 0
  std::vector<EstimatorResult> means;     // one per checkpoint
  double flatness = 0.0;                  // max pairwise paired z-score
  std::uint64_t discarded = 0;
};

/// Empirical means of P(Z_t - xi1_t, xi2_t - xi1_t) or
/// Upsilon_t^(d-2) h(theta1_t, theta2_t) at the checkpoints.
MartingaleResult martingale_drift_test(const MartingaleConfig& cfg, const MCSettings& mc);

/// The observable used by martingale_drift_test, evaluated at a state.
double martingale_observable(MartingaleKind kind, const SLEParams& p, cplx Z, double log_gprime,
                             double xi1, double xi2, const Tolerance& tol);

struct RadialBesselConfig {
  SLEParams params;
  double theta0 = 1.5707963267948966;
  double T = 20.0;
  double dt = 1e-2;
  int bins = 50;
};

struct RadialBesselResult {
  std::vector<double> bin_edges;
  std::vector<double> density;  // empirical density per bin
  double ks_distance = 0.0;
  EstimatorResult mean;         // of Theta_T
  std::uint64_t reflections = 0;
  std::vector<std::string> warnings;
};

/// Endpoints of d Theta = 2a cot(Theta) dt + dB by Euler-Maruyama with
/// reflection, compared with psi(x) = (c_*/2) sin^(4a) x.
RadialBesselResult radial_bessel_stationary(const RadialBesselConfig& cfg, const MCSettings& mc);

/// CDF of psi on [0, pi].
double radial_bessel_cdf(double x, double a);

}  // namespace slecft::sim
