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


#include "slecft/sim/tracking.hpp"

#include <algorithm>
#include <cmath>

#include "flow.hpp"
#include "slecft/errors.hpp"

namespace slecft::sim {

const char* to_string(StopReason r) {
  switch (r) {
    case StopReason::kRunning: return "running";
    case StopReason::kUpsilon: return "upsilon";
    case StopReason::kAngle: return "angle";
    case StopReason::kTime: return "time";
    case StopReason::kStepLimit: return "step_limit";
  }
  return "unknown";
}

double TrackedPoint::upsilon() const { return Z.imag() * std::exp(-log_gprime); }

namespace {

bool hits_stop(cplx Z, double log_gp, double xi1, const StopRule& rule, StopReason& why) {
  if (rule.upsilon_eps > 0.0 && Z.imag() * std::exp(-log_gp) <= rule.upsilon_eps) {
    why = StopReason::kUpsilon;
    return true;
  }
  if (rule.angle_n > 0 && Z.imag() * rule.angle_n <= std::abs(Z - xi1)) {
    why = StopReason::kAngle;
    return true;
  }
  return false;
}

}  // namespace

PointTrack track_point(const DrivingPath& d, cplx z, const StopRule& stop) {
  if (!(z.imag() > 0.0)) throw DomainError("track_point: z must lie in the upper half-plane");
  if (d.times.empty()) throw DomainError("track_point: empty driving path");
  const bool force = !d.xi2.empty();
  PointTrack tr;
  cplx Z = z;
  double lg = 0.0;
  auto record = [&](std::size_t i) {
    tr.times.push_back(d.times[i]);
    tr.Z.push_back(Z);
    tr.log_gprime.push_back(lg);
    tr.theta1.push_back(std::arg(Z - d.xi1[i]));
    if (force) tr.theta2.push_back(std::arg(Z - d.xi2[i]));
    tr.upsilon.push_back(Z.imag() * std::exp(-lg));
  };
  record(0);
  StopReason why;
  if (hits_stop(Z, lg, d.xi1[0], stop, why)) {
    tr.terminated = why;
    return tr;
  }
  for (std::size_t i = 0; i + 1 < d.times.size(); ++i) {
    if (i >= stop.max_steps) {
      tr.terminated = StopReason::kStepLimit;
      return tr;
    }
    const double dt = d.times[i + 1] - d.times[i];
    const double x1 = d.xi1[i];
    const double x2mid = force ? detail::slit_real(d.xi2[i], x1, 2.0 * d.lambda1 * dt) : 0.0;
    Z = detail::flow_point(Z, lg, x1, x2mid, d.lambda1 * dt, force ? d.lambda2 * dt : 0.0);
    if (!(Z.imag() > 0.0)) throw NumericError("track_point: point left the upper half-plane");
    record(i + 1);
    if (hits_stop(Z, lg, d.xi1[i + 1], stop, why)) {
      tr.terminated = why;
      return tr;
    }
    if (d.times[i + 1] >= stop.t_max) {
      tr.terminated = StopReason::kTime;
      return tr;
    }
  }
  tr.terminated = StopReason::kTime;
  return tr;
}

LoewnerSimulation::LoewnerSimulation(const DrivingSpec& spec, const StepPolicy& policy,
                                     std::uint64_t seed, std::uint64_t index)
    : spec_(spec),
      policy_(policy),
      rng_(seed, index),
      seed_(seed),
      xi1_(spec.xi1),
      xi2_(spec.xi2),
      lambda_max_(std::max(spec.lambda1, spec.force_point ? spec.lambda2 : 0.0)),
      min_gap_(spec.force_point ? std::abs(spec.xi2 - spec.xi1) : 0.0) {
  if (!(lambda_max_ > 0.0)) throw DomainError("simulation: no curve is growing");
  if (spec.force_point && !(spec.xi1 != spec.xi2))
    throw DomainError("simulation: force point must differ from the start point");
  if (!(policy.c > 0.0) || !(policy.dt_max > 0.0))
    throw DomainError("simulation: step policy constants must be positive");
}

int LoewnerSimulation::add_point(cplx z) {
  if (!(z.imag() > 0.0)) throw DomainError("simulation: z must lie in the upper half-plane");
  TrackedPoint p;
  p.z0 = z;
  p.Z = z;
  points_.push_back(p);
  return static_cast<int>(points_.size()) - 1;
}

double LoewnerSimulation::theta1(int i) const { return std::arg(points_[i].Z - xi1_); }
double LoewnerSimulation::theta2(int i) const { return std::arg(points_[i].Z - xi2_); }

void LoewnerSimulation::set_recording(bool on) {
  recording_ = on;
  if (on && rec_t_.empty()) {
    rec_t_.push_back(t_);
    rec_xi1_.push_back(xi1_);
    rec_xi2_.push_back(xi2_);
  }
}

DrivingPath LoewnerSimulation::recorded_path() const {
  DrivingPath d;
  d.times = rec_t_;
  d.xi1 = rec_xi1_;
  if (spec_.force_point) d.xi2 = rec_xi2_;
  d.seed = seed_;
  d.scheme = policy_;
  d.lambda1 = spec_.lambda1;
  d.lambda2 = spec_.force_point ? spec_.lambda2 : 0.0;
  d.min_gap = min_gap_;
  return d;
}

double LoewnerSimulation::choose_dt(double t_end) const {
  double m2 = policy_.dt_max;
  for (const auto& p : points_) {
    if (p.reason != StopReason::kRunning) continue;
    if (spec_.lambda1 > 0.0) m2 = std::min(m2, std::norm(p.Z - xi1_));
    if (spec_.force_point && spec_.lambda2 > 0.0) m2 = std::min(m2, std::norm(p.Z - xi2_));
  }
  if (spec_.force_point) m2 = std::min(m2, (xi2_ - xi1_) * (xi2_ - xi1_));
  return std::min(policy_.c * m2 / lambda_max_, t_end - t_);
}

void LoewnerSimulation::advance(double dt, double dw1, double dw2, int depth) {
  const double d1 = xi1_, d2 = xi2_;
  double n1 = d1, n2 = d2, x2mid = d2;
  if (spec_.force_point) {
    x2mid = detail::slit_real(d2, d1, 2.0 * spec_.lambda1 * dt);
    n1 = detail::slit_real(d1, x2mid, 2.0 * spec_.lambda2 * dt);
    n2 = x2mid;
    n1 += spec_.iota1 / (d1 - d2) * dt + spec_.sigma1 * dw1;
    n2 += spec_.iota2 / (d2 - d1) * dt + spec_.sigma2 * dw2;
    const double g0 = d2 - d1, g1 = n2 - n1;
    if (!(g0 * g1 > 0.0) || std::abs(g1) < 0.01 * std::abs(g0)) {
      // The step would close the gap: split it along a Brownian bridge.
      if (depth >= policy_.max_refine)
        throw NumericError("simulation: gap between driving points collapsed");
      const double sd = 0.5 * std::sqrt(dt);
      const double m1 = 0.5 * dw1 + (spec_.sigma1 > 0.0 ? sd * rng_.normal() : 0.0);
      const double m2 = 0.5 * dw2 + (spec_.sigma2 > 0.0 ? sd * rng_.normal() : 0.0);
      advance(0.5 * dt, m1, m2, depth + 1);
      advance(0.5 * dt, dw1 - m1, dw2 - m2, depth + 1);
      return;
    }
  } else {
    n1 = d1 + spec_.sigma1 * dw1;
  }
  const double l2dt = spec_.force_point ? spec_.lambda2 * dt : 0.0;
  for (auto& p : points_) {
    if (p.reason != StopReason::kRunning) continue;
    p.Z = detail::flow_point(p.Z, p.log_gprime, d1, x2mid, spec_.lambda1 * dt, l2dt);
  }
  xi1_ = n1;
  xi2_ = n2;
  t_ += dt;
  ++steps_;
  if (spec_.force_point) min_gap_ = std::min(min_gap_, std::abs(n2 - n1));
  if (recording_) {
    rec_t_.push_back(t_);
    rec_xi1_.push_back(xi1_);
    rec_xi2_.push_back(xi2_);
  }
}

void LoewnerSimulation::update_stops(const StopRule& rule) {
  for (auto& p : points_) {
    if (p.reason != StopReason::kRunning) continue;
    StopReason why;
    if (hits_stop(p.Z, p.log_gprime, xi1_, rule, why)) {
      p.reason = why;
      p.stop_time = t_;
    }
  }
}

void LoewnerSimulation::run(double t_end, const StopRule& rule) {
  const double target = std::min(t_end, rule.t_max);
  auto any_running = [&] {
    if (points_.empty()) return true;
    return std::any_of(points_.begin(), points_.end(),
                       [](const TrackedPoint& p) { return p.reason == StopReason::kRunning; });
  };
  update_stops(rule);
  while (t_ < target && any_running()) {
    if (steps_ >= rule.max_steps) {
      for (auto& p : points_)
        if (p.reason == StopReason::kRunning) {
          p.reason = StopReason::kStepLimit;
          p.stop_time = t_;
        }
      return;
    }
    const double dt = choose_dt(target);
    if (!std::isfinite(dt)) throw DomainError("simulation: step size is unbounded; set dt_max");
    const bool last = dt >= target - t_;
    const double sq = std::sqrt(dt);
    const double dw1 = spec_.sigma1 > 0.0 ? sq * rng_.normal() : 0.0;
    const double dw2 = spec_.force_point && spec_.sigma2 > 0.0 ? sq * rng_.normal() : 0.0;
    advance(dt, dw1, dw2, 0);
    if (last) {
      t_ = target;
      if (recording_) rec_t_.back() = target;
    }
    update_stops(rule);
  }
  if (t_ >= rule.t_max) {
    for (auto& p : points_)
      if (p.reason == StopReason::kRunning) {
        p.reason = StopReason::kTime;
        p.stop_time = t_;
      }
  }
}

}  // namespace slecft::sim
