// Copyright 2026 The regular-qgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "rqg/expansion.hpp"
#include "rqg/graph_model.hpp"
#include "rqg/orbits.hpp"
#include "rqg/spectral_core.hpp"
#include "rqg/trig_form.hpp"

namespace {

const rqg::ChainGraph& step_chain() {
  static const rqg::ChainGraph chain = rqg::chain_from_step({0.3, 0.5});
  return chain;
}

void BM_Spectrum(benchmark::State& state) {
  const rqg::TrigForm trig = rqg::trig_form(step_chain());
  const long mu = rqg::find_mu(trig);
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rqg::spectrum(trig, mu, count));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Spectrum)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_ExpandLevel(benchmark::State& state) {
  const rqg::TrigForm trig = rqg::trig_form(step_chain());
  const long mu = rqg::find_mu(trig);
  const int budget = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rqg::expand_level(step_chain(), trig, mu, 10, budget));
  }
}
BENCHMARK(BM_ExpandLevel)->DenseRange(5, 20, 5)->Unit(benchmark::kMillisecond);

void BM_EnumeratePrimes(benchmark::State& state) {
  const int budget = static_cast<int>(state.range(0));
  for (auto _ : state) {
    rqg::PrimeOrbitStream stream(step_chain(), budget);
    std::size_t n = 0;
    while (auto p = stream.next()) ++n;
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumeratePrimes)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
