// Copyright 2026 The meetwer Authors
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

#include "generators.hpp"
#include "meetwer/greedy.hpp"
#include "meetwer/levenshtein.hpp"
#include "meetwer/stream_assignment.hpp"

using namespace meetwer;

namespace {

std::vector<Token> chain(testing::Rng& rng, std::size_t n) {
  std::vector<Token> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = {static_cast<int>(testing::uniform(rng, 0, 50)), 0.4 * static_cast<double>(i),
              0.4 * static_cast<double>(i) + 0.3};
  }
  return out;
}

void BM_LevUnbounded(benchmark::State& state) {
  testing::Rng rng(1);
  const auto ref = chain(rng, static_cast<std::size_t>(state.range(0)));
  const auto hyp = chain(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lev_distance(ref, hyp));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LevUnbounded)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_LevBanded(benchmark::State& state) {
  testing::Rng rng(1);
  const auto ref = chain(rng, static_cast<std::size_t>(state.range(0)));
  const auto hyp = chain(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lev_distance(ref, hyp, CostScheme::unit(), Collar(5)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LevBanded)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_LevFullMatrix(benchmark::State& state) {
  testing::Rng rng(1);
  const auto ref = chain(rng, static_cast<std::size_t>(state.range(0)));
  const auto hyp = chain(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tc_lev_full_matrix(ref, hyp, CostScheme::unit(), Collar(5)));
  }
}
BENCHMARK(BM_LevFullMatrix)->RangeMultiplier(4)->Range(64, 4096);

void BM_TcOrc(benchmark::State& state) {
  testing::Rng rng(2);
  const auto inst = testing::long_session(rng, static_cast<std::size_t>(state.range(0)), 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(orc_wer(inst.ref, inst.hyp, Collar(5)).distance);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TcOrc)->RangeMultiplier(2)->Range(500, 4000)->Unit(benchmark::kMillisecond)
    ->Complexity();

void BM_GreedyDiCp(benchmark::State& state) {
  testing::Rng rng(3);
  const auto inst = testing::long_session(rng, static_cast<std::size_t>(state.range(0)), 3, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_di_cp(inst.ref, inst.hyp, Collar(5)).distance);
  }
}
BENCHMARK(BM_GreedyDiCp)->RangeMultiplier(2)->Range(500, 4000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
