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
#include <complex>

#include <benchmark/benchmark.h>

#include "slecft/contour.hpp"
#include "slecft/quadrature.hpp"
#include "slecft/special.hpp"

namespace {

using slecft::cplx;

void BM_Gauss2F1Series(benchmark::State& state) {
  const cplx w(0.3, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(slecft::gauss_2f1(-1.5, 2.5, 1.0, w));
}
BENCHMARK(BM_Gauss2F1Series);

void BM_Gauss2F1FarField(benchmark::State& state) {
  // Outside the unit disc: Pfaff or ODE continuation.
  const cplx w(0.5, -3.0);
  for (auto _ : state) benchmark::DoNotOptimize(slecft::gauss_2f1(-1.5, 2.5, 1.0, w));
}
BENCHMARK(BM_Gauss2F1FarField);

void BM_IntegrateSegmentSingular(benchmark::State& state) {
  auto f = [](cplx u) { return 1.0 / std::sqrt(u); };
  for (auto _ : state)
    benchmark::DoNotOptimize(slecft::integrate_segment(f, cplx(0.0), cplx(1.0, 0.0)));
}
BENCHMARK(BM_IntegrateSegmentSingular);

void BM_PochhammerLoop(benchmark::State& state) {
  const std::array<slecft::PowerFactor, 2> f = {{{0.0, -0.37}, {1.0, 0.61}}};
  const slecft::ContourPath path = slecft::ContourPath::pochhammer(0.5, 1.0, 0.25, 0.0, 0.25);
  for (auto _ : state) benchmark::DoNotOptimize(slecft::integrate_contour(f, path).value);
}
BENCHMARK(BM_PochhammerLoop);

}  // namespace

BENCHMARK_MAIN();
