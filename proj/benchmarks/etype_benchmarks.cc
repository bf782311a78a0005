// Copyright 2026 The etype Authors.
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

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "etype/em.h"
#include "etype/metrics.h"
#include "etype/pca.h"
#include "etype/ranked_list.h"
#include "etype/trainer.h"

namespace etype {
namespace {

RankedList RandomList(std::mt19937_64& rng, int length, int vocabulary) {
  RankedList l;
  while (static_cast<int>(l.size()) < length) {
    std::string w = "w" + std::to_string(rng() % vocabulary);
    if (std::find(l.begin(), l.end(), w) == l.end()) l.push_back(std::move(w));
  }
  return l;
}

void BM_RankBiasedOverlap(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int depth = static_cast<int>(state.range(0));
  const RankedList a = RandomList(rng, depth, 4 * depth);
  const RankedList b = RandomList(rng, depth, 4 * depth);
  for (auto _ : state) {
    benchmark::DoNotOptimize(RankBiasedOverlap(a, b, 0.9, depth));
  }
}
BENCHMARK(BM_RankBiasedOverlap)->Arg(10)->Arg(100);

void BM_Metrics(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const int n = static_cast<int>(state.range(0));
  std::uniform_int_distribution<int> label(0, 9);
  metrics::ClusteringResult r;
  for (int i = 0; i < n; ++i) {
    r.predicted.push_back(label(rng));
    r.reference.push_back(label(rng));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(metrics::AdjustedRandIndex(r));
    benchmark::DoNotOptimize(metrics::NormalizedMutualInformation(r));
    benchmark::DoNotOptimize(metrics::BCubedScores(r));
    benchmark::DoNotOptimize(metrics::ClusteringAccuracy(r));
  }
}
BENCHMARK(BM_Metrics)->Arg(1000)->Arg(100000);

void BM_PcaReduce(benchmark::State& state) {
  const Eigen::MatrixXd m =
      Eigen::MatrixXd::Random(state.range(0), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(PcaReduce(m, 50).projected);
}
BENCHMARK(BM_PcaReduce)->Args({200, 2000})->Args({1000, 5000});

void BM_VmfPosteriors(benchmark::State& state) {
  Eigen::MatrixXd z = Eigen::MatrixXd::Random(100, state.range(0));
  z.colwise().normalize();
  Eigen::MatrixXd c = Eigen::MatrixXd::Random(100, 30);
  c.colwise().normalize();
  for (auto _ : state) {
    const Eigen::MatrixXd p = VmfPosteriors(z, c, 10.0);
    benchmark::DoNotOptimize(Sharpen(p));
  }
}
BENCHMARK(BM_VmfPosteriors)->Arg(1000)->Arg(10000);

// One pretraining epoch at the default architecture.
void BM_PretrainEpoch(benchmark::State& state) {
  PairMatrix data;
  data.hp = Eigen::MatrixXd::Random(64, state.range(0));
  data.ho = Eigen::MatrixXd::Random(64, state.range(0));
  TrainConfig config;
  config.num_clusters = 5;
  config.pretrain_epochs = 1;
  LatentModel model = CreateModel(data, config);
  for (auto _ : state) Pretrain(model, data, config);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PretrainEpoch)->Arg(600)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace etype

BENCHMARK_MAIN();
