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

#ifndef ETYPE_KMEANS_H_
#define ETYPE_KMEANS_H_

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace etype {

struct KMeansResult {
  Eigen::MatrixXd centers;  // dim x K
  std::vector<int> labels;  // one per point
  double inertia = 0.0;     // sum of squared distances (Euclidean) or of
                            // 1 - cos (spherical)
  int iterations = 0;
};

// Cosine k-means on the unit sphere with k-means++ seeding (distance 1 - cos).
// `points` holds one sample per column. Centers are unit vectors. The restart
// with the lowest inertia among `n_init` is returned. Throws DomainError if
// K > N or K < 1.
KMeansResult SphericalKMeans(const Eigen::MatrixXd& points, int k,
                             uint64_t seed, int n_init = 10,
                             int max_iters = 100);

// Lloyd's algorithm with k-means++ seeding; the restart with the lowest
// inertia among `n_init` is returned.
KMeansResult EuclideanKMeans(const Eigen::MatrixXd& points, int k,
                             uint64_t seed, int n_init = 10,
                             int max_iters = 300);

// Initial vMF directions for the clustering phase: spherical k-means centers
// of the latent points.
Eigen::MatrixXd InitCenters(const Eigen::MatrixXd& latents, int k,
                            uint64_t seed);

}  // namespace etype

#endif  // ETYPE_KMEANS_H_
