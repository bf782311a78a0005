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

#ifndef ETYPE_EM_H_
#define ETYPE_EM_H_

#include <vector>

#include <Eigen/Core>

namespace etype {

// Lower clamp applied to posteriors inside the log of the clustering
// objective.
inline constexpr double kPosteriorFloor = 1e-12;

// Posterior over K clusters of a uniform-prior vMF mixture with shared
// concentration: softmax_k(kappa * cos(z, c_k)). The vMF normalizer is the
// same for every component and cancels. `centers` is d x K.
Eigen::VectorXd VmfPosterior(const Eigen::VectorXd& z,
                             const Eigen::MatrixXd& centers, double kappa);

// Row i is VmfPosterior of column i of `latents` (d x N). Result is N x K.
Eigen::MatrixXd VmfPosteriors(const Eigen::MatrixXd& latents,
                              const Eigen::MatrixXd& centers, double kappa);

// Squares each posterior, divides by the cluster's total soft frequency
// s_k = sum_i p_ik and renormalizes each row.
Eigen::MatrixXd Sharpen(const Eigen::MatrixXd& posteriors);

// sum_i sum_k q_ik * ln(max(p_ik, kPosteriorFloor)). Always <= 0 for
// stochastic rows.
double ClusteringObjective(const Eigen::MatrixXd& p, const Eigen::MatrixXd& q);

// argmax of each row; the first maximum wins.
std::vector<int> HardLabels(const Eigen::MatrixXd& posteriors);

}  // namespace etype

#endif  // ETYPE_EM_H_
