//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "molsight/common.hpp"
#include "molsight/num/rng.hpp"

namespace molsight::num {

enum class Mode { Train, Eval };

struct ForwardCache {
  std::vector<Eigen::MatrixXd> inputs;   // input of each layer
  std::vector<Eigen::MatrixXd> preacts;  // pre-activation of each layer
  std::vector<Eigen::MatrixXd> masks;    // inverted-dropout masks (hidden layers)
  bool valid = false;
};

struct Gradients {
  std::vector<Eigen::MatrixXd> w;
  std::vector<Eigen::VectorXd> b;
  Eigen::MatrixXd input;  // filled when requested
};

/// Fully connected net: ReLU hidden layers with optional inverted dropout,
/// linear output. Rows are samples. Kaiming-uniform fan-in init.
class DenseNet {
 public:
  DenseNet() = default;

  static DenseNet create(const std::vector<int>& dims, std::uint64_t seed,
                         std::vector<double> dropout = {});

  int layer_count() const { return static_cast<int>(weights_.size()); }
  int input_dim() const { return dims_.front(); }
  int output_dim() const { return dims_.back(); }
  const std::vector<int>& dims() const { return dims_; }
  const std::vector<double>& dropout() const { return dropout_; }

  /// Eval mode is deterministic and dropout-free; train mode needs an rng and
  /// (for backward) a cache. Throws ShapeMismatch on batch width mismatch.
  Eigen::MatrixXd forward(const Eigen::MatrixXd& x, Mode mode, Rng* rng = nullptr,
                          ForwardCache* cache = nullptr) const;

  /// Backprop from dLoss/dOutput. Throws MissingCache without a valid cache.
  Gradients backward(const ForwardCache& cache, const Eigen::MatrixXd& out_grad,
                     bool want_input_grad = false) const;

  std::vector<Eigen::MatrixXd>& weights() { return weights_; }
  std::vector<Eigen::VectorXd>& biases() { return biases_; }
  const std::vector<Eigen::MatrixXd>& weights() const { return weights_; }
  const std::vector<Eigen::VectorXd>& biases() const { return biases_; }

  DenseNet(std::vector<int> dims, std::vector<double> dropout,
           std::vector<Eigen::MatrixXd> weights, std::vector<Eigen::VectorXd> biases);

 private:
  std::vector<int> dims_;
  std::vector<double> dropout_;
  std::vector<Eigen::MatrixXd> weights_;  // out x in
  std::vector<Eigen::VectorXd> biases_;
};

struct LossGrad {
  double loss = 0;
  Eigen::MatrixXd grad;
};

/// Mean over batch of the squared error summed over output dims.
LossGrad mse_loss(const Eigen::MatrixXd& pred, const Eigen::MatrixXd& target);

/// Numerically stable binary cross-entropy on logits; optional positive-class
/// weight for the loss-weighting balancing alternative.
LossGrad bce_with_logits(const Eigen::MatrixXd& logits, const Eigen::VectorXd& labels,
                         double pos_weight = 1.0);

}  // namespace molsight::num
