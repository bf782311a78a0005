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

#include "etype/pca.h"

#include <algorithm>

#include <Eigen/SVD>

#include "etype/errors.h"

namespace etype {

PcaResult PcaReduce(const Eigen::MatrixXd& m, int target_dim) {
  if (m.rows() < 2) throw DomainError("pca: need at least 2 rows");
  if (target_dim < 1) throw DomainError("pca: target_dim must be >= 1");

  PcaResult out;
  out.mean = m.colwise().mean();
  const Eigen::MatrixXd centered = m.rowwise() - out.mean;

  const Eigen::Index bound = std::min(m.rows(), m.cols()) - 1;
  const Eigen::Index k =
      std::max<Eigen::Index>(0, std::min<Eigen::Index>(target_dim, bound));
  if (k == 0) {
    out.projected.resize(m.rows(), 0);
    out.components.resize(m.cols(), 0);
    out.singular_values.resize(0);
    return out;
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinV);
  out.components = svd.matrixV().leftCols(k);
  out.singular_values = svd.singularValues().head(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    Eigen::Index arg = 0;
    out.components.col(j).cwiseAbs().maxCoeff(&arg);
    if (out.components(arg, j) < 0) out.components.col(j) *= -1.0;
  }
  out.projected = centered * out.components;
  return out;
}

}  // namespace etype
