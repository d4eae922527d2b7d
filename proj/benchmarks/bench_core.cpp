// Copyright 2026 The dramcontend Authors.
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

#include "dramcontend/address_map.hpp"
#include "dramcontend/bank_engine.hpp"
#include "dramcontend/experiment.hpp"

namespace {

using namespace dramcontend;

void BM_Decompose(benchmark::State& state) {
  const DramGeometry g;
  Bytes off = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(g, off));
    off = (off + 4096 + 64) % g.module_bytes();
  }
}
BENCHMARK(BM_Decompose);

void BM_ServiceRequest(benchmark::State& state) {
  const DramGeometry g;
  const TimingParams t;
  std::vector<BankState> banks(g.total_banks());
  const Bytes size = static_cast<Bytes>(state.range(0));
  Cycle now = 0;
  Bytes off = 0;
  for (auto _ : state) {
    const auto out = service_request(MemoryRequest{0, off, MemoryOp::Write, size, now}, g, t, banks, now);
    now = out.completion_cycle;
    off = (off + 16 * 1024) % (1024 * 1024);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ServiceRequest)->Arg(1024)->Arg(16 * 1024);

void BM_RunExperiment(benchmark::State& state) {
  const DramGeometry g;
  ExperimentConfig c;
  c.mode = state.range(0) ? ExperimentMode::Bomb : ExperimentMode::Navigate;
  c.workload_bytes = 512 * 1024;
  c.attackers = static_cast<std::uint32_t>(state.range(1));
  c.repetitions = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment(g, c).victim_total_cycles);
}
BENCHMARK(BM_RunExperiment)->Args({0, 1})->Args({0, 7})->Args({1, 1})->Args({1, 7})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
