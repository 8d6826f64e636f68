// Copyright 2026 The pslq Authors
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

// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "pslq/axioms.hpp"
#include "pslq/generator.hpp"
#include "pslq/mechanisms.hpp"
#include "pslq/strategy_lab.hpp"

namespace {

using namespace pslq;

Market bench_market(int n, int k) {
  GeneratorConfig cfg;
  cfg.n = n;
  cfg.k = k;
  cfg.seed = 42;
  cfg.quota = QuotaStyle::kIntegerTight;
  return generate_market(cfg);
}

void BM_RplqExactSerial(benchmark::State& state) {
  const Market m = bench_market(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(run_rplq_exact_serial(m));
}

void BM_RplqExactParallel(benchmark::State& state) {
  const Market m = bench_market(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(run_rplq_exact(m));
}

void BM_ManipulationSerial(benchmark::State& state) {
  const Market m = bench_market(6, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_manipulation_serial(Mechanism::kPslq, m, 0));
  }
}

void BM_ManipulationParallel(benchmark::State& state) {
  const Market m = bench_market(6, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_manipulation(Mechanism::kPslq, m, 0));
  }
}

DeterministicAssignment bench_assignment(const Market& m) {
  return run_priolq(m, Permutation::identity(m.students()));
}

void BM_ParetoSerial(benchmark::State& state) {
  const Market m = bench_market(static_cast<int>(state.range(0)), 3);
  const auto mu = bench_assignment(m);
  for (auto _ : state) benchmark::DoNotOptimize(is_mqc_efficient_serial(mu, m));
}

void BM_ParetoParallel(benchmark::State& state) {
  const Market m = bench_market(static_cast<int>(state.range(0)), 3);
  const auto mu = bench_assignment(m);
  for (auto _ : state) benchmark::DoNotOptimize(is_mqc_efficient(mu, m));
}

BENCHMARK(BM_RplqExactSerial)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RplqExactParallel)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ManipulationSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ManipulationParallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParetoSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParetoParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
