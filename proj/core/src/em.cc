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

#include "etype/em.h"

#include <algorithm>
#include <cmath>

#include "etype/errors.h"

namespace etype {

namespace {

Eigen::MatrixXd NormalizedColumns(const Eigen::MatrixXd& m) {
  Eigen::MatrixXd out = m;
  for (Eigen::Index j = 0; j < out.cols(); ++j) out.col(j).normalize();
  return out;
}

}  // namespace

Eigen::VectorXd VmfPosterior(const Eigen::VectorXd& z,
                             const Eigen::MatrixXd& centers, double kappa) {
  if (z.size() != centers.rows()) {
    throw DomainError("vmf posterior: latent/center dimension mismatch");
  }
  const Eigen::VectorXd logits =
      kappa * (NormalizedColumns(centers).transpose() * z.normalized());
  const Eigen::VectorXd e = (logits.array() - logits.maxCoeff()).exp();
  return e / e.sum();
}

Eigen::MatrixXd VmfPosteriors(const Eigen::MatrixXd& latents,
                              const Eigen::MatrixXd& centers, double kappa) {
  if (latents.rows() != centers.rows()) {
    throw DomainError("vmf posterior: latent/center dimension mismatch");
  }
  Eigen::MatrixXd logits = kappa * (NormalizedColumns(latents).transpose() *
                                    NormalizedColumns(centers));
  for (Eigen::Index i = 0; i < logits.rows(); ++i) {
    const double top = logits.row(i).maxCoeff();
    logits.row(i) = (logits.row(i).array() - top).exp();
    logits.row(i) /= logits.row(i).sum();
  }
  return logits;
}

Eigen::MatrixXd Sharpen(const Eigen::MatrixXd& posteriors) {
  const Eigen::RowVectorXd s = posteriors.colwise().sum();
  Eigen::MatrixXd q(posteriors.rows(), posteriors.cols());
  for (Eigen::Index i = 0; i < q.rows(); ++i) {
    for (Eigen::Index k = 0; k < q.cols(); ++k) {
      const double p = posteriors(i, k);
      q(i, k) = s(k) > 0.0 ? p * p / s(k) : 0.0;
    }
    q.row(i) /= q.row(i).sum();
  }
  return q;
}

double ClusteringObjective(const Eigen::MatrixXd& p,
                           const Eigen::MatrixXd& q) {
  if (p.rows() != q.rows() || p.cols() != q.cols()) {
    throw DomainError("clustering objective: shape mismatch");
  }
  double total = 0.0;
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    for (Eigen::Index k = 0; k < p.cols(); ++k) {
      if (q(i, k) == 0.0) continue;
      total += q(i, k) * std::log(std::max(p(i, k), kPosteriorFloor));
    }
  }
  return total;
}

std::vector<int> HardLabels(const Eigen::MatrixXd& posteriors) {
  std::vector<int> labels(static_cast<size_t>(posteriors.rows()), 0);
  for (Eigen::Index i = 0; i < posteriors.rows(); ++i) {
    Eigen::Index arg = 0;
    posteriors.row(i).maxCoeff(&arg);
    labels[static_cast<size_t>(i)] = static_cast<int>(arg);
  }
  return labels;
}

}  // namespace etype
