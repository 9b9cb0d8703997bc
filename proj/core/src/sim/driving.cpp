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


#include "slecft/sim/driving.hpp"

#include <cmath>

#include "slecft/errors.hpp"
#include "slecft/sim/tracking.hpp"

namespace slecft::sim {

DrivingSpec DrivingSpec::chordal(const SLEParams& p, double xi1) {
  DrivingSpec s;
  s.params = p;
  s.xi1 = xi1;
  s.xi2 = xi1;
  s.lambda1 = p.a;
  s.sigma1 = 1.0;
  return s;
}

DrivingSpec DrivingSpec::slekr(const SLEParams& p, double xi1, double xi2) {
  if (!(xi1 != xi2)) throw DomainError("slekr: force point must differ from the start point");
  DrivingSpec s = chordal(p, xi1);
  s.xi2 = xi2;
  s.force_point = true;
  s.iota1 = p.r;
  return s;
}

DrivingSpec DrivingSpec::bichordal(const SLEParams& p, double xi1, double xi2, double lambda1,
                                   double lambda2) {
  if (!(xi1 < xi2)) throw DomainError("bichordal: requires xi1 < xi2");
  if (!(lambda1 >= 0.0 && lambda2 >= 0.0) || !(lambda1 + lambda2 > 0.0))
    throw DomainError("bichordal: growth speeds must be nonnegative and not both zero");
  DrivingSpec s;
  s.params = p;
  s.xi1 = xi1;
  s.xi2 = xi2;
  s.force_point = true;
  s.lambda1 = lambda1;
  s.lambda2 = lambda2;
  s.iota1 = lambda1;
  s.iota2 = lambda2;
  s.sigma1 = std::sqrt(0.5 * p.kappa * lambda1);
  s.sigma2 = std::sqrt(0.5 * p.kappa * lambda2);
  return s;
}

DrivingPath sample_driving(const DrivingSpec& spec, double T, std::uint64_t seed,
                           const StepPolicy& policy, std::uint64_t index) {
  if (!(T > 0.0)) throw DomainError("sample_driving: T must be positive");
  LoewnerSimulation sim(spec, policy, seed, index);
  sim.set_recording(true);
  sim.run(T, StopRule{});
  return sim.recorded_path();
}

DrivingPath sample_driving_chordal(const SLEParams& p, double T, std::uint64_t seed,
                                   const StepPolicy& policy, std::uint64_t index) {
  return sample_driving(DrivingSpec::chordal(p), T, seed, policy, index);
}

DrivingPath sample_driving_slekr(const SLEParams& p, double xi1, double xi2, double T,
                                 std::uint64_t seed, const StepPolicy& policy,
                                 std::uint64_t index) {
  return sample_driving(DrivingSpec::slekr(p, xi1, xi2), T, seed, policy, index);
}

DrivingPath sample_driving_bichordal(const SLEParams& p, double xi1, double xi2, double lambda1,
                                     double lambda2, double T, std::uint64_t seed,
                                     const StepPolicy& policy, std::uint64_t index) {
  return sample_driving(DrivingSpec::bichordal(p, xi1, xi2, lambda1, lambda2), T, seed, policy,
                        index);
}

}  // namespace slecft::sim
