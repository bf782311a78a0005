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

#ifndef ETYPE_METRICS_H_
#define ETYPE_METRICS_H_

#include <span>
#include <vector>

namespace etype::metrics {

// Predicted and reference cluster labels for the same N elements.
struct ClusteringResult {
  std::vector<int> predicted;
  std::vector<int> reference;
};

// Adjusted Rand index from contingency-table pair counts. When the
// denominator vanishes (both partitions all-singletons or both a single
// cluster) the partitions are identical and 1.0 is returned. Requires N >= 2.
double AdjustedRandIndex(const ClusteringResult& r);

// 2 * MI / (H(ref) + H(pred)) with natural logs; 1.0 when both partitions
// have a single cluster.
double NormalizedMutualInformation(const ClusteringResult& r);

struct BCubed {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

BCubed BCubedScores(const ClusteringResult& r);

// Best accuracy over one-to-one relabelings of the predicted clusters,
// computed with the Hungarian method on the contingency table. Both
// partitions must use the same number of distinct clusters; DomainError
// otherwise.
double ClusteringAccuracy(const ClusteringResult& r);

// Minimum-cost perfect matching on a square cost matrix (row-major n x n).
// Returns the column assigned to each row.
std::vector<int> SolveAssignment(std::span<const double> cost, int n);

}  // namespace etype::metrics

#endif  // ETYPE_METRICS_H_
