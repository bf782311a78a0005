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

#ifndef ETYPE_PCA_H_
#define ETYPE_PCA_H_

#include <Eigen/Core>

namespace etype {

struct PcaResult {
  Eigen::MatrixXd projected;        // rows x k
  Eigen::MatrixXd components;       // cols x k, orthonormal columns
  Eigen::VectorXd singular_values;  // k, non-increasing
  Eigen::RowVectorXd mean;          // column means removed before projection
};

// Principal component projection of the rows of `m`.
//
// Columns are centered and the centered matrix is decomposed by a thin SVD.
// The number of components is min(target_dim, min(rows, cols) - 1). Each
// direction is oriented so that its largest-magnitude coordinate (first one
// on ties) is positive, which makes the output reproducible.
//
// Throws DomainError if `m` has fewer than 2 rows or target_dim < 1.
PcaResult PcaReduce(const Eigen::MatrixXd& m, int target_dim);

}  // namespace etype

#endif  // ETYPE_PCA_H_
