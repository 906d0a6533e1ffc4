// Copyright 2026 The Propeval Authors.
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

// Parallel kernels against their serial references.
//
//   build/bench/propeval_bench --benchmark_filter=Concordance

#include <benchmark/benchmark.h>

#include <random>
#include <sstream>

#include "generators.h"
#include "propeval/datasets.h"
#include "propeval/stats.h"

namespace propeval {
namespace {

std::pair<std::vector<double>, std::vector<double>> GradedVectors(int n) {
  std::mt19937 rng(n);
  std::uniform_int_distribution<> grade(1, 5);
  std::normal_distribution<double> noise;
  std::vector<double> x(n), y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = grade(rng);
    y[i] = x[i] + noise(rng);
  }
  return {x, y};
}

void BM_CountConcordance(benchmark::State& state) {
  const auto [x, y] = GradedVectors(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(CountConcordance(x, y));
  state.SetComplexityN(state.range(0));
}

void BM_CountConcordanceSerial(benchmark::State& state) {
  const auto [x, y] = GradedVectors(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(CountConcordanceSerial(x, y));
  state.SetComplexityN(state.range(0));
}

struct BenchData {
  JudgmentDataset dataset;
  Lexicon lexicon;
};

const BenchData& Data() {
  static const BenchData* data = [] {
    const testing::SyntheticDataset synthetic =
        testing::MakeSyntheticDataset(7, 10, 100);
    std::istringstream judgments(synthetic.judgments);
    auto* d = new BenchData;
    d->dataset = ReadJudgments(judgments, IndexParses(synthetic.parses));
    d->lexicon = Lexicon::LoadDefault();
    return d;
  }();
  return *data;
}

void BM_ScoreDataset(benchmark::State& state) {
  const BenchData& data = Data();
  for (auto _ : state) benchmark::DoNotOptimize(ScoreDataset(data.dataset, data.lexicon));
  state.SetItemsProcessed(state.iterations() * data.dataset.records.size());
}

void BM_ScoreDatasetSerial(benchmark::State& state) {
  const BenchData& data = Data();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ScoreDatasetSerial(data.dataset, data.lexicon));
  }
  state.SetItemsProcessed(state.iterations() * data.dataset.records.size());
}

BENCHMARK(BM_CountConcordance)->RangeMultiplier(4)->Range(256, 16384)->Complexity();
BENCHMARK(BM_CountConcordanceSerial)->RangeMultiplier(4)->Range(256, 16384)->Complexity();
BENCHMARK(BM_ScoreDataset)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScoreDatasetSerial)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace propeval

BENCHMARK_MAIN();
