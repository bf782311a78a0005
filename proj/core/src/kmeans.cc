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

#include "etype/kmeans.h"

#include <algorithm>
#include <limits>
#include <random>

#include "etype/errors.h"

namespace etype {

namespace {

// k-means++: first center uniform, then proportional to `distance` to the
// nearest chosen center.
template <typename Distance>
std::vector<Eigen::Index> PlusPlusSeeds(const Eigen::MatrixXd& points, int k,
                                        std::mt19937_64& rng,
                                        Distance distance) {
  const Eigen::Index n = points.cols();
  std::vector<Eigen::Index> seeds;
  std::uniform_int_distribution<Eigen::Index> first(0, n - 1);
  seeds.push_back(first(rng));
  std::vector<double> nearest(static_cast<size_t>(n),
                              std::numeric_limits<double>::infinity());
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  while (static_cast<int>(seeds.size()) < k) {
    const Eigen::VectorXd last = points.col(seeds.back());
    double total = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double d = std::max(0.0, distance(points.col(i), last));
      nearest[i] = std::min(nearest[i], d);
      total += nearest[i];
    }
    Eigen::Index pick = -1;
    if (total > 0.0) {
      double target = unit(rng) * total;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (nearest[i] <= 0.0) continue;
        pick = i;
        target -= nearest[i];
        if (target < 0.0) break;
      }
    }
    if (pick < 0) {
      // All remaining points coincide with a center; take the first unused.
      for (Eigen::Index i = 0; i < n && pick < 0; ++i) {
        if (std::find(seeds.begin(), seeds.end(), i) == seeds.end()) pick = i;
      }
    }
    seeds.push_back(pick);
  }
  return seeds;
}

void CheckK(const Eigen::MatrixXd& points, int k) {
  if (k < 1) throw DomainError("k-means: K must be >= 1");
  if (k > points.cols()) {
    throw DomainError("k-means: K = " + std::to_string(k) + " exceeds N = " +
                      std::to_string(points.cols()));
  }
}

}  // namespace

KMeansResult SphericalKMeans(const Eigen::MatrixXd& points, int k,
                             uint64_t seed, int n_init, int max_iters) {
  CheckK(points, k);
  Eigen::MatrixXd unit = points;
  for (Eigen::Index i = 0; i < unit.cols(); ++i) unit.col(i).normalize();

  std::mt19937_64 rng(seed);
  KMeansResult best;
  best.inertia = std::numeric_limits<double>::infinity();
  for (int run = 0; run < std::max(1, n_init); ++run) {
    const auto seeds =
        PlusPlusSeeds(unit, k, rng, [](const auto& a, const auto& b) {
          return 1.0 - a.dot(b);
        });
    KMeansResult r;
    r.centers.resize(unit.rows(), k);
    for (int j = 0; j < k; ++j) r.centers.col(j) = unit.col(seeds[j]);
    r.labels.assign(static_cast<size_t>(unit.cols()), -1);

    for (r.iterations = 0; r.iterations < max_iters; ++r.iterations) {
      const Eigen::MatrixXd sims = r.centers.transpose() * unit;  // K x N
      bool changed = false;
      for (Eigen::Index i = 0; i < unit.cols(); ++i) {
        Eigen::Index arg = 0;
        sims.col(i).maxCoeff(&arg);
        if (r.labels[i] != arg) {
          r.labels[i] = static_cast<int>(arg);
          changed = true;
        }
      }
      if (!changed) break;
      Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(unit.rows(), k);
      for (Eigen::Index i = 0; i < unit.cols(); ++i) {
        sums.col(r.labels[i]) += unit.col(i);
      }
      for (int j = 0; j < k; ++j) {
        const double n = sums.col(j).norm();
        if (n > 0.0) r.centers.col(j) = sums.col(j) / n;  // empty keeps old
      }
    }
    r.inertia = 0.0;
    for (Eigen::Index i = 0; i < unit.cols(); ++i) {
      r.inertia += 1.0 - r.centers.col(r.labels[i]).dot(unit.col(i));
    }
    if (r.inertia < best.inertia) best = std::move(r);
  }
  return best;
}

KMeansResult EuclideanKMeans(const Eigen::MatrixXd& points, int k,
                             uint64_t seed, int n_init, int max_iters) {
  CheckK(points, k);
  std::mt19937_64 rng(seed);
  KMeansResult best;
  best.inertia = std::numeric_limits<double>::infinity();
  const Eigen::Index n = points.cols();
  for (int run = 0; run < std::max(1, n_init); ++run) {
    const auto seeds =
        PlusPlusSeeds(points, k, rng, [](const auto& a, const auto& b) {
          return (a - b).squaredNorm();
        });
    KMeansResult r;
    r.centers.resize(points.rows(), k);
    for (int j = 0; j < k; ++j) r.centers.col(j) = points.col(seeds[j]);
    r.labels.assign(static_cast<size_t>(n), -1);
    for (r.iterations = 0; r.iterations < max_iters; ++r.iterations) {
      bool changed = false;
      for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::Index arg = 0;
        (r.centers.colwise() - points.col(i)).colwise().squaredNorm().minCoeff(
            &arg);
        if (r.labels[i] != arg) {
          r.labels[i] = static_cast<int>(arg);
          changed = true;
        }
      }
      if (!changed) break;
      Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(points.rows(), k);
      std::vector<int> sizes(static_cast<size_t>(k), 0);
      for (Eigen::Index i = 0; i < n; ++i) {
        sums.col(r.labels[i]) += points.col(i);
        ++sizes[r.labels[i]];
      }
      for (int j = 0; j < k; ++j) {
        if (sizes[j] > 0) r.centers.col(j) = sums.col(j) / sizes[j];
      }
    }
    r.inertia = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      r.inertia += (points.col(i) - r.centers.col(r.labels[i])).squaredNorm();
    }
    if (r.inertia < best.inertia) best = std::move(r);
  }
  return best;
}

Eigen::MatrixXd InitCenters(const Eigen::MatrixXd& latents, int k,
                            uint64_t seed) {
  return SphericalKMeans(latents, k, seed).centers;
}

}  // namespace etype
