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

#include "etype/trainer.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "etype/em.h"
#include "etype/errors.h"
#include "etype/kmeans.h"

namespace etype {

namespace {

// Independent, reproducible streams for the separate random phases.
uint64_t DeriveSeed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

enum Stream : uint64_t { kInit = 0, kPretrain = 1, kCenters = 2, kCluster = 3 };

std::vector<std::vector<Eigen::Index>> ShuffledBatches(Eigen::Index n,
                                                       int batch_size,
                                                       std::mt19937_64& rng) {
  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<Eigen::Index>> batches;
  for (size_t start = 0; start < order.size(); start += batch_size) {
    const size_t end = std::min(order.size(), start + batch_size);
    batches.emplace_back(order.begin() + start, order.begin() + end);
  }
  return batches;
}

void CheckFinite(double value, const char* phase) {
  if (!std::isfinite(value)) {
    throw DivergenceError(std::string(phase) + ": objective became non-finite");
  }
}

}  // namespace

void TrainConfig::Validate() const {
  if (num_clusters < 1) throw DomainError("K must be >= 1");
  if (latent_dim < 1) throw DomainError("latent_dim must be >= 1");
  for (int h : encoder_hidden) {
    if (h < 1) throw DomainError("hidden widths must be >= 1");
  }
  if (!(kappa > 0.0)) throw DomainError("kappa must be > 0");
  if (!(lambda > 0.0)) throw DomainError("lambda must be > 0");
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0,1)");
  if (max_iters < 1) throw DomainError("max_iters must be >= 1");
  if (!(learning_rate > 0.0)) throw DomainError("learning_rate must be > 0");
  if (batch_size < 1) throw DomainError("batch_size must be >= 1");
  if (pretrain_epochs < 0) throw DomainError("pretrain_epochs must be >= 0");
}

const char* StopReasonName(StopReason r) {
  return r == StopReason::kConverged ? "converged" : "max_iters";
}

PairMatrix PairMatrix::FromPairs(const std::vector<POPair>& pairs) {
  PairMatrix m;
  if (pairs.empty()) return m;
  const Eigen::Index dp = pairs[0].h_p.size();
  const Eigen::Index dob = pairs[0].h_o.size();
  m.hp.resize(dp, static_cast<Eigen::Index>(pairs.size()));
  m.ho.resize(dob, static_cast<Eigen::Index>(pairs.size()));
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].h_p.size() != dp || pairs[i].h_o.size() != dob) {
      throw InputError("pair features have inconsistent dimensions");
    }
    m.hp.col(static_cast<Eigen::Index>(i)) = pairs[i].h_p;
    m.ho.col(static_cast<Eigen::Index>(i)) = pairs[i].h_o;
  }
  return m;
}

LatentModel CreateModel(const PairMatrix& data, const TrainConfig& config) {
  LatentArchitecture arch;
  arch.input_p = static_cast<int>(data.hp.rows());
  arch.input_o = static_cast<int>(data.ho.rows());
  arch.encoder_hidden = config.encoder_hidden;
  arch.latent_dim = config.latent_dim;
  arch.num_clusters = config.num_clusters;
  std::mt19937_64 rng(DeriveSeed(config.seed, kInit));
  return LatentModel::Create(arch, config.kappa, rng);
}

void Pretrain(LatentModel& model, const PairMatrix& data,
              const TrainConfig& config, std::vector<double>* curve) {
  if (config.pretrain_epochs == 0 || data.size() == 0) return;
  std::mt19937_64 rng(DeriveSeed(config.seed, kPretrain));
  Adam adam(config.learning_rate);
  for (int epoch = 0; epoch < config.pretrain_epochs; ++epoch) {
    for (const auto& idx : ShuffledBatches(data.size(), config.batch_size, rng)) {
      const Eigen::MatrixXd hp = data.hp(Eigen::all, idx);
      const Eigen::MatrixXd ho = data.ho(Eigen::all, idx);
      LatentGradients g = LatentGradients::ZerosLike(model);
      const ObjectiveTerms t =
          EvaluateObjective(model, hp, ho, nullptr, 0.0, &g);
      CheckFinite(t.total, "pretraining");
      g.Scale(-1.0);
      adam.Step(model.Parameters(false), g.Views(false));
    }
    const double rec = ReconstructionObjective(model, data.hp, data.ho);
    CheckFinite(rec, "pretraining");
    if (curve != nullptr) curve->push_back(rec);
  }
}

Eigen::MatrixXd EncodeAll(const LatentModel& model, const PairMatrix& data) {
  return EncodeBatch(model, data.hp, data.ho);
}

Assignment ComputeAssignment(const LatentModel& model, const PairMatrix& data) {
  Assignment a;
  a.posterior = VmfPosteriors(EncodeAll(model, data), model.centers,
                              model.kappa);
  a.labels = HardLabels(a.posterior);
  return a;
}

TrainResult Train(const PairMatrix& data, const TrainConfig& config) {
  config.Validate();
  const Eigen::Index n = data.size();
  if (config.num_clusters > n) {
    throw DomainError("K = " + std::to_string(config.num_clusters) +
                      " exceeds the number of pairs (" + std::to_string(n) +
                      ")");
  }

  TrainResult result;
  result.model = CreateModel(data, config);
  Pretrain(result.model, data, config, &result.pretrain_curve);

  result.model.centers =
      InitCenters(EncodeAll(result.model, data), config.num_clusters,
                  DeriveSeed(config.seed, kCenters));
  Assignment current = ComputeAssignment(result.model, data);

  std::mt19937_64 rng(DeriveSeed(config.seed, kCluster));
  Adam adam(config.learning_rate);
  result.stop = StopReason::kMaxIters;
  for (int iter = 1; iter <= config.max_iters; ++iter) {
    const Eigen::MatrixXd targets = Sharpen(current.posterior);
    for (const auto& idx : ShuffledBatches(n, config.batch_size, rng)) {
      const Eigen::MatrixXd hp = data.hp(Eigen::all, idx);
      const Eigen::MatrixXd ho = data.ho(Eigen::all, idx);
      const Eigen::MatrixXd q = targets(idx, Eigen::all);
      LatentGradients g = LatentGradients::ZerosLike(result.model);
      const ObjectiveTerms t =
          EvaluateObjective(result.model, hp, ho, &q, config.lambda, &g);
      CheckFinite(t.total, "clustering");
      g.Scale(-1.0);
      adam.Step(result.model.Parameters(true), g.Views(true));
      result.model.NormalizeCenters();
    }
    Assignment next = ComputeAssignment(result.model, data);
    long changed = 0;
    for (size_t i = 0; i < next.labels.size(); ++i) {
      changed += next.labels[i] != current.labels[i];
    }
    const double fraction =
        static_cast<double>(changed) / static_cast<double>(n);
    result.changed_fraction.push_back(fraction);
    current = std::move(next);
    result.iterations = iter;
    if (fraction < config.delta) {
      result.stop = StopReason::kConverged;
      break;
    }
  }
  result.assignment = std::move(current);
  return result;
}

TrainResult Train(const std::vector<POPair>& pairs, const TrainConfig& config) {
  return Train(PairMatrix::FromPairs(pairs), config);
}

std::vector<std::vector<RankedPair>> RankPairsPerType(
    const LatentModel& model, const std::vector<int>& labels,
    const std::vector<POPair>& pairs) {
  if (labels.size() != pairs.size()) {
    throw DomainError("rank: labels and pairs differ in length");
  }
  std::vector<std::vector<RankedPair>> out(
      static_cast<size_t>(model.num_clusters()));
  if (pairs.empty()) return out;
  const Eigen::MatrixXd z = EncodeAll(model, PairMatrix::FromPairs(pairs));
  for (size_t i = 0; i < pairs.size(); ++i) {
    const int k = labels[i];
    const Eigen::VectorXd c = model.centers.col(k).normalized();
    out.at(k).push_back({static_cast<int>(i),
                         model.kappa * z.col(static_cast<Eigen::Index>(i)).dot(c)});
  }
  for (auto& members : out) {
    std::sort(members.begin(), members.end(),
              [&](const RankedPair& a, const RankedPair& b) {
                if (a.score != b.score) return a.score > b.score;
                const POPair& pa = pairs[a.index];
                const POPair& pb = pairs[b.index];
                if (pa.frequency != pb.frequency) {
                  return pa.frequency > pb.frequency;
                }
                if (pa.predicate_sense != pb.predicate_sense) {
                  return pa.predicate_sense < pb.predicate_sense;
                }
                return pa.object_head < pb.object_head;
              });
  }
  return out;
}

}  // namespace etype
