// Copyright 2026 The spurplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <memory>
#include <string>

#include "spurplan/cascade.hpp"
#include "spurplan/filtersynth.hpp"
#include "spurplan/planner.hpp"

namespace {

using namespace spurplan;

constexpr double kMHz = 1e6;

PlanConfig mca_config(int max_order) {
  PlanConfig c;
  c.table = std::make_shared<const SpurTable>(
      load_spur_table(std::string(SPURPLAN_BENCH_DATA_DIR) + "/mca1-60.spur"));
  c.rf_center_hz = 2900 * kMHz;
  c.rf_bw_hz = 400 * kMHz;
  c.if_bw_hz = 30 * kMHz;
  c.max_order = max_order;
  return c;
}

void BM_FindRegions(benchmark::State& state) {
  const PlanConfig c = mca_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_spur_free_regions(c));
}
BENCHMARK(BM_FindRegions)->Arg(5)->Arg(10)->Arg(20);

void BM_SweepOracle(benchmark::State& state) {
  const PlanConfig c = mca_config(10);
  const FrequencyBand search{1500 * kMHz, 2100 * kMHz};
  const double step = static_cast<double>(state.range(0)) * 1e3;
  for (auto _ : state) benchmark::DoNotOptimize(sweep_oracle(c, search, step));
}
BENCHMARK(BM_SweepOracle)->Arg(1000)->Arg(100);

void BM_CascadeChain(benchmark::State& state) {
  const ChainSpec chain = load_chain(std::string(SPURPLAN_BENCH_DATA_DIR) + "/sband.chain");
  for (auto _ : state) benchmark::DoNotOptimize(chain_report(chain.stages));
}
BENCHMARK(BM_CascadeChain);

void BM_LadderResponse(benchmark::State& state) {
  const LcLadder ladder =
      lc_bandpass(chebyshev_prototype(static_cast<int>(state.range(0)), 0.5), 60 * kMHz, 5 * kMHz, 50);
  double f = 50 * kMHz;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ladder_s21_db(ladder, f));
    f = f > 70 * kMHz ? 50 * kMHz : f + 1e3;
  }
}
BENCHMARK(BM_LadderResponse)->Arg(3)->Arg(9);

}  // namespace
