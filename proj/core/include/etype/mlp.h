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

#ifndef ETYPE_MLP_H_
#define ETYPE_MLP_H_

#include <random>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace etype {

// Fully connected stack with rectified-linear hidden layers and a linear
// output layer. Batches are column-major: one sample per column.
class Mlp {
 public:
  struct Layer {
    Eigen::MatrixXd weight;  // out x in
    Eigen::VectorXd bias;    // out
  };

  // Per-batch activations kept for the backward pass. activations[0] is the
  // input, activations[l] the output of layer l (after the nonlinearity).
  struct Cache {
    std::vector<Eigen::MatrixXd> activations;
  };

  using Gradients = std::vector<Layer>;

  Mlp() = default;

  // dims = {input, hidden..., output}. Weights are drawn He-uniform, biases
  // start at zero.
  Mlp(const std::vector<int>& dims, std::mt19937_64& rng);

  Eigen::MatrixXd Forward(const Eigen::MatrixXd& x, Cache* cache) const;

  // Adds the parameter gradients for upstream gradient `d_out` to `grads`
  // and returns the gradient with respect to the input batch.
  Eigen::MatrixXd Backward(const Cache& cache, const Eigen::MatrixXd& d_out,
                           Gradients* grads) const;

  Gradients ZeroGradients() const;

  // Flat views of every parameter tensor, in a fixed order.
  void AppendParameters(std::vector<std::span<double>>& out);
  static void AppendGradients(Gradients& grads,
                              std::vector<std::span<double>>& out);

  int input_dim() const;
  int output_dim() const;
  std::vector<int> dims() const;

  const std::vector<Layer>& layers() const { return layers_; }
  std::vector<Layer>& mutable_layers() { return layers_; }

 private:
  std::vector<Layer> layers_;
};

// Adaptive moment estimation over a fixed list of flat parameter tensors.
class Adam {
 public:
  explicit Adam(double learning_rate, double beta1 = 0.9,
                double beta2 = 0.999, double epsilon = 1e-8);

  // Descent step: params -= lr * m_hat / (sqrt(v_hat) + eps). The tensor
  // list must have the same shapes on every call.
  void Step(const std::vector<std::span<double>>& params,
            const std::vector<std::span<double>>& grads);

  long steps() const { return t_; }

 private:
  double lr_, beta1_, beta2_, eps_;
  long t_ = 0;
  std::vector<std::vector<double>> m_, v_;
};

}  // namespace etype

#endif  // ETYPE_MLP_H_
