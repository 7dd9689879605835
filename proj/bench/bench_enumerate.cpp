// Copyright 2026 The Suzuki Groups Authors
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

// Parallel kernels against their serial references.
//
//   bench_enumerate [--benchmark_filter=...]
//
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "suzuki/enumerate.hpp"
#include "suzuki/reference.hpp"

namespace {

using namespace suzuki;

const Ring& ring_for(const benchmark::State& state) {
  return make_ring(RingKind::kGF2m, static_cast<int>(state.range(0)));
}

void label(benchmark::State& state, std::uint64_t elements) {
  state.SetItemsProcessed(static_cast<std::int64_t>(elements) * state.iterations());
  state.counters["threads"] = omp_get_max_threads();
}

void BM_EnumerateAll_Parallel(benchmark::State& state) {
  const Ring& r = ring_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(r).size());
  label(state, cell_count(r.field_order()));
}

void BM_EnumerateAll_Serial(benchmark::State& state) {
  const Ring& r = ring_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(reference::enumerate_all(r).size());
  label(state, cell_count(r.field_order()));
}

void BM_CountStreaming_Parallel(benchmark::State& state) {
  const Ring& r = ring_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(count_streaming(r).forms);
  label(state, cell_count(r.field_order()));
}

void BM_CountStreaming_Serial(benchmark::State& state) {
  const Ring& r = ring_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(reference::count_streaming(r).forms);
  label(state, cell_count(r.field_order()));
}

void BM_BfsExplore_Parallel(benchmark::State& state) {
  const Ring& r = ring_for(state);
  const auto gens = standard_generators(r);
  for (auto _ : state) benchmark::DoNotOptimize(bfs_explore(gens, 100000).set.size());
  label(state, cell_count(r.field_order()));
}

void BM_BfsExplore_Serial(benchmark::State& state) {
  const Ring& r = ring_for(state);
  const auto gens = standard_generators(r);
  for (auto _ : state) benchmark::DoNotOptimize(reference::bfs_explore(gens, 100000).set.size());
  label(state, cell_count(r.field_order()));
}

BENCHMARK(BM_EnumerateAll_Parallel)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateAll_Serial)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountStreaming_Parallel)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountStreaming_Serial)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BfsExplore_Parallel)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BfsExplore_Serial)->Arg(3)->Unit(benchmark::kMillisecond);
// One Sz(32) pass each; slow, so a single iteration.
BENCHMARK(BM_CountStreaming_Parallel)->Arg(5)->Iterations(1)->Unit(benchmark::kSecond);
BENCHMARK(BM_CountStreaming_Serial)->Arg(5)->Iterations(1)->Unit(benchmark::kSecond);

}  // namespace

BENCHMARK_MAIN();
