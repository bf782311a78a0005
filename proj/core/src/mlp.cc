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

#include "etype/mlp.h"

#include <cmath>

#include "etype/errors.h"

namespace etype {

Mlp::Mlp(const std::vector<int>& dims, std::mt19937_64& rng) {
  if (dims.size() < 2) throw DomainError("mlp needs at least two dims");
  for (size_t l = 0; l + 1 < dims.size(); ++l) {
    const int in = dims[l];
    const int out = dims[l + 1];
    if (in < 1 || out < 1) throw DomainError("mlp dims must be positive");
    const double limit = std::sqrt(6.0 / in);
    std::uniform_real_distribution<double> dist(-limit, limit);
    Layer layer;
    layer.weight.resize(out, in);
    for (Eigen::Index j = 0; j < layer.weight.cols(); ++j) {
      for (Eigen::Index i = 0; i < layer.weight.rows(); ++i) {
        layer.weight(i, j) = dist(rng);
      }
    }
    layer.bias = Eigen::VectorXd::Zero(out);
    layers_.push_back(std::move(layer));
  }
}

Eigen::MatrixXd Mlp::Forward(const Eigen::MatrixXd& x, Cache* cache) const {
  Eigen::MatrixXd a = x;
  if (cache != nullptr) {
    cache->activations.clear();
    cache->activations.push_back(x);
  }
  for (size_t l = 0; l < layers_.size(); ++l) {
    Eigen::MatrixXd next = layers_[l].weight * a;
    next.colwise() += layers_[l].bias;
    if (l + 1 < layers_.size()) next = next.cwiseMax(0.0);
    a = std::move(next);
    if (cache != nullptr) cache->activations.push_back(a);
  }
  return a;
}

Eigen::MatrixXd Mlp::Backward(const Cache& cache, const Eigen::MatrixXd& d_out,
                              Gradients* grads) const {
  Eigen::MatrixXd delta = d_out;
  for (size_t l = layers_.size(); l-- > 0;) {
    if (l + 1 < layers_.size()) {
      // ReLU: pass gradient where the unit was active.
      delta = (cache.activations[l + 1].array() > 0.0)
                  .select(delta, Eigen::MatrixXd::Zero(delta.rows(),
                                                       delta.cols()));
    }
    (*grads)[l].weight.noalias() += delta * cache.activations[l].transpose();
    (*grads)[l].bias += delta.rowwise().sum();
    delta = layers_[l].weight.transpose() * delta;
  }
  return delta;
}

Mlp::Gradients Mlp::ZeroGradients() const {
  Gradients g;
  for (const Layer& layer : layers_) {
    g.push_back({Eigen::MatrixXd::Zero(layer.weight.rows(),
                                       layer.weight.cols()),
                 Eigen::VectorXd::Zero(layer.bias.size())});
  }
  return g;
}

void Mlp::AppendParameters(std::vector<std::span<double>>& out) {
  for (Layer& layer : layers_) {
    out.emplace_back(layer.weight.data(), layer.weight.size());
    out.emplace_back(layer.bias.data(), layer.bias.size());
  }
}

void Mlp::AppendGradients(Gradients& grads,
                          std::vector<std::span<double>>& out) {
  for (Layer& layer : grads) {
    out.emplace_back(layer.weight.data(), layer.weight.size());
    out.emplace_back(layer.bias.data(), layer.bias.size());
  }
}

int Mlp::input_dim() const {
  return layers_.empty() ? 0 : static_cast<int>(layers_.front().weight.cols());
}

int Mlp::output_dim() const {
  return layers_.empty() ? 0 : static_cast<int>(layers_.back().weight.rows());
}

std::vector<int> Mlp::dims() const {
  std::vector<int> d;
  if (layers_.empty()) return d;
  d.push_back(input_dim());
  for (const Layer& layer : layers_) {
    d.push_back(static_cast<int>(layer.weight.rows()));
  }
  return d;
}

Adam::Adam(double learning_rate, double beta1, double beta2, double epsilon)
    : lr_(learning_rate), beta1_(beta1), beta2_(beta2), eps_(epsilon) {}

void Adam::Step(const std::vector<std::span<double>>& params,
                const std::vector<std::span<double>>& grads) {
  if (params.size() != grads.size()) {
    throw DomainError("adam: parameter/gradient count mismatch");
  }
  if (m_.empty()) {
    for (const auto& p : params) {
      m_.emplace_back(p.size(), 0.0);
      v_.emplace_back(p.size(), 0.0);
    }
  }
  if (m_.size() != params.size()) {
    throw DomainError("adam: parameter list changed between steps");
  }
  ++t_;
  const double c1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
  const double c2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
  for (size_t i = 0; i < params.size(); ++i) {
    std::span<double> p = params[i];
    std::span<double> g = grads[i];
    std::vector<double>& m = m_[i];
    std::vector<double>& v = v_[i];
    if (p.size() != m.size() || g.size() != m.size()) {
      throw DomainError("adam: tensor shape changed between steps");
    }
    for (size_t j = 0; j < p.size(); ++j) {
      m[j] = beta1_ * m[j] + (1.0 - beta1_) * g[j];
      v[j] = beta2_ * v[j] + (1.0 - beta2_) * g[j] * g[j];
      p[j] -= lr_ * (m[j] / c1) / (std::sqrt(v[j] / c2) + eps_);
    }
  }
}

}  // namespace etype
