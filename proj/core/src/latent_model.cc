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

#include "etype/latent_model.h"

#include <algorithm>
#include <cmath>

#include "etype/em.h"
#include "etype/errors.h"

namespace etype {

namespace {

constexpr double kTinyNorm = 1e-12;

// Column norms of m, floored at kTinyNorm.
Eigen::RowVectorXd ColumnNorms(const Eigen::MatrixXd& m) {
  return m.colwise().norm().cwiseMax(kTinyNorm);
}

Eigen::MatrixXd DivideColumns(const Eigen::MatrixXd& m,
                              const Eigen::RowVectorXd& norms) {
  return m.array().rowwise() / norms.array();
}

// Backward pass of y = x / |x| given y, dL/dy and |x|.
Eigen::MatrixXd NormalizeBackward(const Eigen::MatrixXd& y,
                                  const Eigen::MatrixXd& dy,
                                  const Eigen::RowVectorXd& norms) {
  const Eigen::RowVectorXd proj = (y.array() * dy.array()).colwise().sum();
  Eigen::MatrixXd dx = dy - (y.array().rowwise() * proj.array()).matrix();
  return DivideColumns(dx, norms);
}

// Sum over columns of cos(h_i, r_i); optionally writes d/dr.
double CosineColumns(const Eigen::MatrixXd& h, const Eigen::MatrixXd& r,
                     Eigen::MatrixXd* dr) {
  const Eigen::RowVectorXd hn = ColumnNorms(h);
  const Eigen::RowVectorXd rn = ColumnNorms(r);
  double total = 0.0;
  if (dr != nullptr) dr->resize(r.rows(), r.cols());
  for (Eigen::Index i = 0; i < h.cols(); ++i) {
    const double c = h.col(i).dot(r.col(i)) / (hn(i) * rn(i));
    total += c;
    if (dr != nullptr) {
      dr->col(i) = h.col(i) / (hn(i) * rn(i)) - c * r.col(i) / (rn(i) * rn(i));
    }
  }
  return total;
}

}  // namespace

LatentModel LatentModel::Create(const LatentArchitecture& arch, double kappa,
                                std::mt19937_64& rng) {
  if (arch.input_p < 1 || arch.input_o < 1 || arch.latent_dim < 1 ||
      arch.num_clusters < 1) {
    throw DomainError("latent model: dimensions must be positive");
  }
  auto encoder_dims = [&](int input) {
    std::vector<int> d{input};
    d.insert(d.end(), arch.encoder_hidden.begin(), arch.encoder_hidden.end());
    d.push_back(arch.latent_dim);
    return d;
  };
  auto decoder_dims = [&](int output) {
    std::vector<int> d{arch.latent_dim};
    d.insert(d.end(), arch.encoder_hidden.rbegin(), arch.encoder_hidden.rend());
    d.push_back(output);
    return d;
  };
  LatentModel m;
  m.enc_p = Mlp(encoder_dims(arch.input_p), rng);
  m.dec_p = Mlp(decoder_dims(arch.input_p), rng);
  m.enc_o = Mlp(encoder_dims(arch.input_o), rng);
  m.dec_o = Mlp(decoder_dims(arch.input_o), rng);
  std::normal_distribution<double> normal(0.0, 1.0);
  m.centers.resize(arch.latent_dim, arch.num_clusters);
  for (Eigen::Index k = 0; k < m.centers.cols(); ++k) {
    for (Eigen::Index i = 0; i < m.centers.rows(); ++i) {
      m.centers(i, k) = normal(rng);
    }
  }
  m.NormalizeCenters();
  m.kappa = kappa;
  return m;
}

std::vector<std::span<double>> LatentModel::Parameters(bool include_centers) {
  std::vector<std::span<double>> out;
  enc_p.AppendParameters(out);
  dec_p.AppendParameters(out);
  enc_o.AppendParameters(out);
  dec_o.AppendParameters(out);
  if (include_centers) out.emplace_back(centers.data(), centers.size());
  return out;
}

void LatentModel::NormalizeCenters() {
  for (Eigen::Index k = 0; k < centers.cols(); ++k) {
    const double n = centers.col(k).norm();
    if (n < kTinyNorm) throw DivergenceError("cluster center collapsed to 0");
    centers.col(k) /= n;
  }
}

LatentGradients LatentGradients::ZerosLike(const LatentModel& model) {
  LatentGradients g;
  g.enc_p = model.enc_p.ZeroGradients();
  g.dec_p = model.dec_p.ZeroGradients();
  g.enc_o = model.enc_o.ZeroGradients();
  g.dec_o = model.dec_o.ZeroGradients();
  g.centers = Eigen::MatrixXd::Zero(model.centers.rows(), model.centers.cols());
  return g;
}

std::vector<std::span<double>> LatentGradients::Views(bool include_centers) {
  std::vector<std::span<double>> out;
  Mlp::AppendGradients(enc_p, out);
  Mlp::AppendGradients(dec_p, out);
  Mlp::AppendGradients(enc_o, out);
  Mlp::AppendGradients(dec_o, out);
  if (include_centers) out.emplace_back(centers.data(), centers.size());
  return out;
}

void LatentGradients::Scale(double factor) {
  for (std::span<double> v : Views(true)) {
    for (double& x : v) x *= factor;
  }
}

Eigen::MatrixXd EncodeBatch(const LatentModel& model, const Eigen::MatrixXd& hp,
                            const Eigen::MatrixXd& ho) {
  const Eigen::MatrixXd up = model.enc_p.Forward(hp, nullptr);
  const Eigen::MatrixXd uo = model.enc_o.Forward(ho, nullptr);
  const Eigen::MatrixXd sum =
      DivideColumns(up, ColumnNorms(up)) + DivideColumns(uo, ColumnNorms(uo));
  const Eigen::RowVectorXd norms = sum.colwise().norm();
  if (norms.size() > 0 && norms.minCoeff() < kTinyNorm) {
    throw DomainError("pair latent undefined: encodings are antipodal");
  }
  return DivideColumns(sum, norms);
}

Eigen::VectorXd EncodePair(const LatentModel& model, const Eigen::VectorXd& hp,
                           const Eigen::VectorXd& ho) {
  return EncodeBatch(model, hp, ho).col(0);
}

ObjectiveTerms EvaluateObjective(const LatentModel& model,
                                 const Eigen::MatrixXd& hp,
                                 const Eigen::MatrixXd& ho,
                                 const Eigen::MatrixXd* targets, double lambda,
                                 LatentGradients* grads) {
  const Eigen::Index batch = hp.cols();
  Mlp::Cache enc_p_cache, enc_o_cache, dec_p_cache, dec_o_cache;
  const bool backward = grads != nullptr;

  const Eigen::MatrixXd up =
      model.enc_p.Forward(hp, backward ? &enc_p_cache : nullptr);
  const Eigen::MatrixXd uo =
      model.enc_o.Forward(ho, backward ? &enc_o_cache : nullptr);
  const Eigen::RowVectorXd up_norm = ColumnNorms(up);
  const Eigen::RowVectorXd uo_norm = ColumnNorms(uo);
  const Eigen::MatrixXd np = DivideColumns(up, up_norm);
  const Eigen::MatrixXd no = DivideColumns(uo, uo_norm);
  const Eigen::MatrixXd rp =
      model.dec_p.Forward(np, backward ? &dec_p_cache : nullptr);
  const Eigen::MatrixXd ro =
      model.dec_o.Forward(no, backward ? &dec_o_cache : nullptr);

  ObjectiveTerms terms;
  Eigen::MatrixXd d_rp, d_ro;
  terms.reconstruction = CosineColumns(hp, rp, backward ? &d_rp : nullptr) +
                         CosineColumns(ho, ro, backward ? &d_ro : nullptr);

  Eigen::MatrixXd d_np = Eigen::MatrixXd::Zero(np.rows(), batch);
  Eigen::MatrixXd d_no = Eigen::MatrixXd::Zero(no.rows(), batch);

  if (targets != nullptr) {
    const Eigen::Index k_count = model.centers.cols();
    if (targets->rows() != batch || targets->cols() != k_count) {
      throw DomainError("targets must be batch x K");
    }
    const Eigen::MatrixXd sum = np + no;
    const Eigen::RowVectorXd sum_norm = sum.colwise().norm();
    if (batch > 0 && sum_norm.minCoeff() < kTinyNorm) {
      throw DomainError("pair latent undefined: encodings are antipodal");
    }
    const Eigen::MatrixXd z = DivideColumns(sum, sum_norm);
    const Eigen::RowVectorXd c_norm = ColumnNorms(model.centers);
    const Eigen::MatrixXd c = DivideColumns(model.centers, c_norm);

    const Eigen::MatrixXd logits = model.kappa * (c.transpose() * z);  // K x B
    const double log_floor = std::log(kPosteriorFloor);
    Eigen::MatrixXd d_logits(k_count, batch);
    for (Eigen::Index i = 0; i < batch; ++i) {
      const double top = logits.col(i).maxCoeff();
      const double lse =
          top + std::log((logits.col(i).array() - top).exp().sum());
      double weight_sum = 0.0;
      Eigen::VectorXd weight(k_count);
      for (Eigen::Index k = 0; k < k_count; ++k) {
        const double logp = logits(k, i) - lse;
        const double q = (*targets)(i, k);
        const bool clamped = logp < log_floor;
        terms.clustering += q * (clamped ? log_floor : logp);
        weight(k) = clamped ? 0.0 : q;
        weight_sum += weight(k);
      }
      if (backward) {
        const Eigen::VectorXd p = (logits.col(i).array() - lse).exp();
        d_logits.col(i) = lambda * (weight - p * weight_sum);
      }
    }
    if (backward) {
      const Eigen::MatrixXd d_z = model.kappa * (c * d_logits);
      const Eigen::MatrixXd d_c = model.kappa * (z * d_logits.transpose());
      const Eigen::MatrixXd d_sum = NormalizeBackward(z, d_z, sum_norm);
      d_np += d_sum;
      d_no += d_sum;
      grads->centers += NormalizeBackward(c, d_c, c_norm);
    }
  }
  terms.total = terms.reconstruction + lambda * terms.clustering;

  if (backward) {
    d_np += model.dec_p.Backward(dec_p_cache, d_rp, &grads->dec_p);
    d_no += model.dec_o.Backward(dec_o_cache, d_ro, &grads->dec_o);
    model.enc_p.Backward(enc_p_cache, NormalizeBackward(np, d_np, up_norm),
                         &grads->enc_p);
    model.enc_o.Backward(enc_o_cache, NormalizeBackward(no, d_no, uo_norm),
                         &grads->enc_o);
  }
  return terms;
}

double ReconstructionObjective(const LatentModel& model,
                               const Eigen::MatrixXd& hp,
                               const Eigen::MatrixXd& ho) {
  return EvaluateObjective(model, hp, ho, nullptr, 0.0, nullptr).reconstruction;
}

}  // namespace etype
