// Copyright 2026 The Authors.
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

// Microbenchmarks for the hot paths: cut evaluation, one estimator round,
// and a full sieve call. Run with --benchmark_min_time=... as usual.

#include <benchmark/benchmark.h>

#include "blits/engine.hpp"
#include "blits/graph_gen.hpp"
#include "blits/objectives.hpp"
#include "blits/oracle.hpp"
#include "blits/rng.hpp"

namespace {

blits::CutGraph bench_graph(blits::Element n, bool weighted) {
  blits::CutGraph g = blits::gen_erdos_renyi(n, 0.5, 7);
  if (weighted) g = blits::assign_uniform_weights(std::move(g), 8);
  return g;
}

void BM_CutValueUnit(benchmark::State& state) {
  const auto n = static_cast<blits::Element>(state.range(0));
  blits::CutOracle oracle(bench_graph(n, false));
  blits::Rng rng(11);
  blits::ElementSet ground = blits::full_set(n);
  blits::ElementSet query = rng.combination(ground, n / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle.value(query));
  }
}
BENCHMARK(BM_CutValueUnit)->Arg(100)->Arg(500);

void BM_CutValueWeighted(benchmark::State& state) {
  const auto n = static_cast<blits::Element>(state.range(0));
  blits::CutOracle oracle(bench_graph(n, true));
  blits::Rng rng(11);
  blits::ElementSet ground = blits::full_set(n);
  blits::ElementSet query = rng.combination(ground, n / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle.value(query));
  }
}
BENCHMARK(BM_CutValueWeighted)->Arg(100)->Arg(500);

void BM_DeltaEstimateRound(benchmark::State& state) {
  const auto n = static_cast<blits::Element>(state.range(0));
  blits::CutOracle oracle(bench_graph(n, true));
  blits::ElementSet X = blits::full_set(n);
  blits::ElementSet S;
  for (auto _ : state) {
    blits::OracleSession session(oracle);
    blits::Rng rng(13);
    benchmark::DoNotOptimize(
        blits::estimate_delta_all(session, S, X, n / 10, 30, rng));
  }
}
BENCHMARK(BM_DeltaEstimateRound)->Arg(100)->Arg(300);

void BM_SieveCall(benchmark::State& state) {
  const auto n = static_cast<blits::Element>(state.range(0));
  blits::CutOracle oracle(bench_graph(n, true));
  blits::BlitsConfig cfg;
  cfg.k = static_cast<int>(n * 7 / 10);
  cfg.r = 10;
  cfg.seed = 17;
  for (auto _ : state) {
    blits::OracleSession session(oracle, cfg.k);
    blits::Rng rng(13);
    blits::ElementSet S;
    blits::SieveParams params =
        blits::SieveParams::from_config(cfg, n, 1, 25.0 * n, // generous guess
                                        blits::BlockChoice::kUniformSample);
    benchmark::DoNotOptimize(blits::sieve(session, S, params, rng));
  }
}
BENCHMARK(BM_SieveCall)->Arg(100)->Arg(300);

}  // namespace

BENCHMARK_MAIN();
