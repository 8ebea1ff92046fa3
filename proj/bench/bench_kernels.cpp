// Copyright 2026 The tilecode Authors
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

#include "tilecode/code_space.hpp"
#include "tilecode/fibonacci.hpp"
#include "tilecode/parallel.hpp"
#include "tilecode/tiling.hpp"

namespace {

using namespace tilecode;

CodeFamily family(unsigned n) { return build_family(greedy_seed_set(2, 3), n); }

void BM_VerifySerial(benchmark::State &state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  CodeFamily f = family(n);
  for (auto _ : state) benchmark::DoNotOptimize(verify_qecc_serial(f, fib(n) + 1));
  state.counters["length"] = static_cast<double>(f.length());
}

void BM_VerifyParallel(benchmark::State &state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  CodeFamily f = family(n);
  configure_threads();
  for (auto _ : state) benchmark::DoNotOptimize(verify_qecc(f, fib(n) + 1));
  state.counters["length"] = static_cast<double>(f.length());
  state.counters["threads"] = thread_count();
}

void BM_Inflate(benchmark::State &state) {
  Tiling w = penrose_wheel();
  for (auto _ : state) benchmark::DoNotOptimize(inflate(w, static_cast<unsigned>(state.range(0))));
}

BENCHMARK(BM_VerifySerial)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Inflate)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
