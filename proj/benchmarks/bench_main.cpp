// Copyright 2026 The Subcover Authors
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

#include <benchmark/benchmark.h>

#include "subcover/baselines.hpp"
#include "subcover/extensions.hpp"
#include "subcover/instance.hpp"
#include "subcover/separation.hpp"
#include "subcover/trial.hpp"

namespace {

using namespace subcover;

Instance BenchInstance(int n, int t) {
  GeneratorParams p;
  p.n = n;
  p.t = t;
  p.density = 0.3;
  p.seed = 7;
  return Generate("set-cover-stream", p);
}

void BM_CoverageEval(benchmark::State& state) {
  const Instance inst = BenchInstance(static_cast<int>(state.range(0)), 25);
  const SetFunctionPtr f = inst.FunctionAt(inst.horizon());
  const Mask full = f->full();
  Mask s = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f->value(s));
    s = (s + 0x9e3779b9) & full;
  }
}
BENCHMARK(BM_CoverageEval)->Arg(8)->Arg(12)->Arg(16);

void BM_CoveringExtensionExact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = BenchInstance(n, 20);
  const SetFunctionPtr f = MaybeMemoize(inst.FunctionAt(inst.horizon()));
  FractionalPoint x(n);
  for (int j = 0; j < n; ++j) x.x[j] = 0.5 * (j + 1) / n;
  for (auto _ : state) {
    benchmark::DoNotOptimize(CoveringExtensionExact(*f, x).value);
  }
}
BENCHMARK(BM_CoveringExtensionExact)->Arg(8)->Arg(12);

void BM_ClockPrefixCandidate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = BenchInstance(n, 25);
  const SetFunctionPtr f = MaybeMemoize(inst.FunctionAt(inst.horizon()));
  FractionalPoint x(n);
  for (int j = 0; j < n; ++j) x.x[j] = 0.4;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ClockPrefixCandidate(*f, x, seed++).value);
  }
}
BENCHMARK(BM_ClockPrefixCandidate)->Arg(8)->Arg(12)->Arg(16);

void BM_GenericRun(benchmark::State& state) {
  const Instance inst = BenchInstance(static_cast<int>(state.range(0)), 15);
  TrialConfig config;
  config.variant = Variant::kGeneric;
  config.attach_opt = false;
  for (auto _ : state) {
    config.seeds = {static_cast<std::uint64_t>(state.iterations())};
    benchmark::DoNotOptimize(RunTrials(inst, config).trials.size());
  }
}
BENCHMARK(BM_GenericRun)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_BruteOpt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Instance inst = BenchInstance(n, 25);
  const SetFunctionPtr f = MaybeMemoize(inst.FunctionAt(inst.horizon()));
  const CostVector costs = inst.cost_vector();
  for (auto _ : state) {
    benchmark::DoNotOptimize(BruteOpt(*f, costs).cost);
  }
}
BENCHMARK(BM_BruteOpt)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
