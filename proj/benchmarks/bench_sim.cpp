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

#include <array>
#include <cstdint>

#include <benchmark/benchmark.h>

#include "slecft/sim/driving.hpp"
#include "slecft/sim/estimators.hpp"
#include "slecft/sim/rng.hpp"

namespace {

using slecft::SLEParams;
namespace sim = slecft::sim;

void BM_Philox(benchmark::State& state) {
  std::array<std::uint32_t, 4> ctr{0, 0, 0, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sim::philox4x32(ctr, {1, 2}));
    ++ctr[0];
  }
}
BENCHMARK(BM_Philox);

void BM_NormalDraw(benchmark::State& state) {
  sim::SampleStream s(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(s.normal());
}
BENCHMARK(BM_NormalDraw);

void BM_DrivingSlekr(benchmark::State& state) {
  const SLEParams p = SLEParams::from_kappa(3.0, 2.0);
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sim::sample_driving_slekr(p, 0.0, 1.0, 1.0, 1, {}, i++));
}
BENCHMARK(BM_DrivingSlekr)->Unit(benchmark::kMicrosecond);

void BM_LeftPassageSample(benchmark::State& state) {
  sim::LeftPassageConfig cfg;
  cfg.driving = sim::DrivingSpec::chordal(SLEParams::from_kappa(4.0));
  cfg.z = {0.5, 0.8660254037844386};
  sim::MCSettings mc;
  mc.n_samples = 100;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sim::estimate_left_passage(cfg, mc).estimate);
    ++mc.seed;
  }
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_LeftPassageSample)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
