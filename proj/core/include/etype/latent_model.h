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

#ifndef ETYPE_LATENT_MODEL_H_
#define ETYPE_LATENT_MODEL_H_

#include <random>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "etype/mlp.h"

namespace etype {

struct LatentArchitecture {
  int input_p = 0;
  int input_o = 0;
  std::vector<int> encoder_hidden = {500, 500, 1000};  // decoder mirrors it
  int latent_dim = 100;
  int num_clusters = 1;
};

// Two autoencoders (predicate side and object side) that share one spherical
// latent space, plus the K cluster directions of a vMF mixture in that space.
struct LatentModel {
  Mlp enc_p, dec_p, enc_o, dec_o;
  Eigen::MatrixXd centers;  // latent_dim x K, unit columns
  double kappa = 10.0;

  // Random initialization; centers start as arbitrary unit vectors and are
  // normally overwritten by InitCenters.
  static LatentModel Create(const LatentArchitecture& arch, double kappa,
                            std::mt19937_64& rng);

  int latent_dim() const { return enc_p.output_dim(); }
  int num_clusters() const { return static_cast<int>(centers.cols()); }

  // Flat views of all trainable tensors; centers are appended last when
  // requested.
  std::vector<std::span<double>> Parameters(bool include_centers);

  void NormalizeCenters();
};

struct LatentGradients {
  Mlp::Gradients enc_p, dec_p, enc_o, dec_o;
  Eigen::MatrixXd centers;

  static LatentGradients ZerosLike(const LatentModel& model);
  std::vector<std::span<double>> Views(bool include_centers);
  void Scale(double factor);
};

struct ObjectiveTerms {
  double reconstruction = 0.0;  // sum of the two cosine terms per pair
  double clustering = 0.0;      // sum_i sum_k q_ik ln p_ik (0 without q)
  double total = 0.0;           // reconstruction + lambda * clustering
};

// Joint latent of a batch (d x B): normalize the mean of the two normalized
// encoder outputs. Throws DomainError if the two encodings cancel.
Eigen::MatrixXd EncodeBatch(const LatentModel& model, const Eigen::MatrixXd& hp,
                            const Eigen::MatrixXd& ho);

Eigen::VectorXd EncodePair(const LatentModel& model, const Eigen::VectorXd& hp,
                           const Eigen::VectorXd& ho);

// Evaluates O_rec + lambda * O_clus on a batch (samples are columns) and, if
// `grads` is non-null, adds the gradient of that total (an ascent direction)
// to it. `targets` is B x K and held fixed; pass nullptr for reconstruction
// only.
ObjectiveTerms EvaluateObjective(const LatentModel& model,
                                 const Eigen::MatrixXd& hp,
                                 const Eigen::MatrixXd& ho,
                                 const Eigen::MatrixXd* targets, double lambda,
                                 LatentGradients* grads);

double ReconstructionObjective(const LatentModel& model,
                               const Eigen::MatrixXd& hp,
                               const Eigen::MatrixXd& ho);

}  // namespace etype

#endif  // ETYPE_LATENT_MODEL_H_
