// Copyright 2026 The devolab Authors.
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

#include <vector>

#include "devolab/benchmarks.hpp"
#include "devolab/de.hpp"
#include "devolab/rng.hpp"

namespace {

using namespace devolab;

static void BM_Evaluate(benchmark::State& state) {
  const auto fn = make_function(static_cast<FunctionId>(state.range(0)));
  Rng rng(1);
  std::vector<double> x(fn.dim);
  for (auto& v : x) v = rng.uniform(fn.lower, fn.upper);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(fn, x, rng));
  }
  state.SetLabel(function_name(fn.id));
}
BENCHMARK(BM_Evaluate)->DenseRange(1, 14);

static void BM_Generation(benchmark::State& state) {
  const auto& variant = all_variants()[static_cast<std::size_t>(state.range(0))];
  de::ControlParams params;
  params.cr = 0.9;
  params.tolerance = 1e-300;  // effectively never stop early
  de::Evolution evo(variant, make_function(FunctionId::f9), params, 42);
  for (auto _ : state) {
    if (evo.done()) {
      state.SkipWithError("budget exhausted");
      break;
    }
    evo.step();
  }
  state.SetItemsProcessed(state.iterations() * params.np);
  state.SetLabel(variant.name());
}
BENCHMARK(BM_Generation)->DenseRange(0, 13)->Iterations(500);

static void BM_FullRunSphere(benchmark::State& state) {
  de::ControlParams params;
  params.cr = 0.9;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(de::run({Mutation::Rand1, Crossover::Binomial},
                                     make_function(FunctionId::f1), params, ++seed));
  }
}
BENCHMARK(BM_FullRunSphere)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
