//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include "molsight/num/dense_net.hpp"

namespace molsight::num {

/// Bias-corrected Adam (beta1 0.9, beta2 0.999, eps 1e-8).
class Adam {
 public:
  explicit Adam(double lr = 1e-3, double beta1 = 0.9, double beta2 = 0.999,
                double eps = 1e-8)
      : lr_(lr), beta1_(beta1), beta2_(beta2), eps_(eps) {}

  void step(DenseNet& net, const Gradients& grads);

  /// Generic tensor update for models not expressed as a DenseNet.
  void step_tensors(std::vector<Eigen::MatrixXd*> params,
                    const std::vector<const Eigen::MatrixXd*>& grads);

  long step_count() const { return t_; }
  double learning_rate() const { return lr_; }

 private:
  double lr_, beta1_, beta2_, eps_;
  long t_ = 0;
  std::vector<Eigen::MatrixXd> m_, v_;

  void ensure_state(const std::vector<const Eigen::MatrixXd*>& grads);
};

}  // namespace molsight::num
