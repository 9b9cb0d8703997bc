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
#include <limits>
#include <vector>

#include "slecft/complex_power.hpp"
#include "slecft/sim/driving.hpp"
#include "slecft/sim/rng.hpp"

namespace slecft::sim {

enum class StopReason {
  kRunning,
  kUpsilon,    // conformal radius reached the threshold
  kAngle,      // sin(theta1) <= 1/n
  kTime,       // time horizon reached
  kStepLimit,  // step budget exhausted
};

const char* to_string(StopReason r);

/// Stopping rule for tracked points. Zero disables a criterion.
struct StopRule {
  double upsilon_eps = 0.0;
  int angle_n = 0;
  double t_max = std::numeric_limits<double>::infinity();
  std::uint64_t max_steps = 50'000'000;
};

/// Recorded flow of one point, Z_t = g_t(z).
struct PointTrack {
  std::vector<double> times;
  std::vector<cplx> Z;
  std::vector<double> log_gprime;
  std::vector<double> theta1;
  std::vector<double> theta2;  // empty without a force point
  std::vector<double> upsilon;
  StopReason terminated = StopReason::kRunning;
};

/// Flow z along a stored driving path, holding the driving constant on each
/// grid interval (each interval then maps exactly by a vertical slit map).
PointTrack track_point(const DrivingPath& driving, cplx z, const StopRule& stop);

struct TrackedPoint {
  cplx z0;
  cplx Z;
  double log_gprime = 0.0;
  StopReason reason = StopReason::kRunning;
  double stop_time = 0.0;

  double upsilon() const;
};

/// Online simulation: the driving is sampled step by step with a step size
/// adapted to the tracked points, so the points stay resolved near the tip.
class LoewnerSimulation {
 public:
  LoewnerSimulation(const DrivingSpec& spec, const StepPolicy& policy, std::uint64_t seed,
                    std::uint64_t index);

  /// Adds a point to track from the current time. Returns its handle.
  int add_point(cplx z);

  /// Advances to t_end or until every tracked point has stopped under `rule`,
  /// whichever comes first. With no points it always runs to t_end.
  void run(double t_end, const StopRule& rule);

  double time() const { return t_; }
  double xi1() const { return xi1_; }
  double xi2() const { return xi2_; }
  std::uint64_t steps() const { return steps_; }
  const TrackedPoint& point(int i) const { return points_[i]; }
  int num_points() const { return static_cast<int>(points_.size()); }
  double theta1(int i) const;
  double theta2(int i) const;

  /// Records (t, xi1, xi2) after every accepted step.
  void set_recording(bool on);
  DrivingPath recorded_path() const;

 private:
  struct State {
    double xi1, xi2;
  };
  double choose_dt(double t_end) const;
  void advance(double dt, double dw1, double dw2, int depth);
  bool accept(const State& from, const State& to) const;
  State flow_driving(double dt, double dw1, double dw2) const;
  void update_stops(const StopRule& rule);

  DrivingSpec spec_;
  StepPolicy policy_;
  SampleStream rng_;
  std::uint64_t seed_;
  double t_ = 0.0;
  double xi1_, xi2_;
  double lambda_max_;
  std::uint64_t steps_ = 0;
  std::vector<TrackedPoint> points_;
  bool recording_ = false;
  std::vector<double> rec_t_, rec_xi1_, rec_xi2_;
  double min_gap_;
};

}  // namespace slecft::sim
