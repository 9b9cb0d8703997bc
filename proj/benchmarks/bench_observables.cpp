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

// Per-point cost of the observables on the paths the CLI tabulates.

#include <benchmark/benchmark.h>

#include "slecft/green.hpp"
#include "slecft/schramm.hpp"

namespace {

using slecft::cplx;
using slecft::SLEParams;

void BM_SchrammGeneric(benchmark::State& state) {
  const SLEParams p = SLEParams::from_kappa(3.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(slecft::schramm_probability(cplx(0.3, 0.7), 1.0, p).value);
}
BENCHMARK(BM_SchrammGeneric)->Unit(benchmark::kMillisecond);

void BM_SchrammNearAxis(benchmark::State& state) {
  const SLEParams p = SLEParams::from_kappa(3.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(slecft::schramm_probability(cplx(-0.5, 1e-3), 1.0, p).value);
}
BENCHMARK(BM_SchrammNearAxis)->Unit(benchmark::kMillisecond);

void BM_FusedSchramm(benchmark::State& state) {
  const SLEParams p = SLEParams::from_kappa(3.0);
  for (auto _ : state) benchmark::DoNotOptimize(slecft::fused_schramm(cplx(0.5, 1.0), p).value);
}
BENCHMARK(BM_FusedSchramm)->Unit(benchmark::kMicrosecond);

void BM_GreenPochhammer(benchmark::State& state) {
  const SLEParams p = SLEParams::from_alpha(2.5);
  for (auto _ : state) benchmark::DoNotOptimize(slecft::green_G(cplx(0.3, 0.8), 0.0, 1.0, p));
}
BENCHMARK(BM_GreenPochhammer)->Unit(benchmark::kMicrosecond);

void BM_HInteger(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(slecft::h_integer({0.8, 2.1}, n));
}
BENCHMARK(BM_HInteger)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_FusedHInteger(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(slecft::fused_h_integer(1.3, 3));
}
BENCHMARK(BM_FusedHInteger)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
