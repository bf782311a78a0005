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

#ifndef ETYPE_TRAINER_H_
#define ETYPE_TRAINER_H_

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "etype/featurizer.h"
#include "etype/latent_model.h"

namespace etype {

struct TrainConfig {
  int num_clusters = 0;  // K, required
  int latent_dim = 100;
  std::vector<int> encoder_hidden = {500, 500, 1000};
  double kappa = 10.0;
  double lambda = 0.02;
  double delta = 0.05;  // stop when fewer than this fraction change cluster
  int max_iters = 100;
  double learning_rate = 0.001;
  int batch_size = 64;
  int pretrain_epochs = 30;
  uint64_t seed = 0;

  // Throws DomainError on non-positive values or delta outside (0, 1).
  void Validate() const;
};

// Pair features as two column-major matrices (one pair per column).
struct PairMatrix {
  Eigen::MatrixXd hp;
  Eigen::MatrixXd ho;

  Eigen::Index size() const { return hp.cols(); }
  static PairMatrix FromPairs(const std::vector<POPair>& pairs);
};

struct Assignment {
  Eigen::MatrixXd posterior;  // N x K, rows sum to 1
  std::vector<int> labels;    // argmax of each row
};

enum class StopReason { kConverged, kMaxIters };

const char* StopReasonName(StopReason r);

struct TrainResult {
  LatentModel model;
  Assignment assignment;
  int iterations = 0;
  StopReason stop = StopReason::kMaxIters;
  std::vector<double> pretrain_curve;    // O_rec after each pretrain epoch
  std::vector<double> changed_fraction;  // per clustering iteration
};

LatentModel CreateModel(const PairMatrix& data, const TrainConfig& config);

// Maximizes the reconstruction objective alone for config.pretrain_epochs
// epochs with Adam. Batches are reshuffled every epoch from a seed-derived
// stream. Appends the full-data objective after each epoch to `curve`.
// Throws DivergenceError on a non-finite objective.
void Pretrain(LatentModel& model, const PairMatrix& data,
              const TrainConfig& config, std::vector<double>* curve = nullptr);

Eigen::MatrixXd EncodeAll(const LatentModel& model, const PairMatrix& data);

Assignment ComputeAssignment(const LatentModel& model, const PairMatrix& data);

// Full procedure: pretrain, initialize centers by spherical k-means on the
// pretrained latents, then alternate target sharpening and one epoch of
// ascent on O_rec + lambda * O_clus until fewer than delta * N pairs change
// hard assignment or max_iters is reached.
TrainResult Train(const PairMatrix& data, const TrainConfig& config);
TrainResult Train(const std::vector<POPair>& pairs, const TrainConfig& config);

struct RankedPair {
  int index = 0;  // into the pair list
  double score = 0.0;  // kappa * cos(z, c_k), the unnormalized vMF log density
};

// Members of each cluster (by hard label) ordered by score descending, then
// frequency descending, then predicate sense and object head.
std::vector<std::vector<RankedPair>> RankPairsPerType(
    const LatentModel& model, const std::vector<int>& labels,
    const std::vector<POPair>& pairs);

}  // namespace etype

#endif  // ETYPE_TRAINER_H_
