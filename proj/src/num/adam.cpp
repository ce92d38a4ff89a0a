//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <cmath>

#include "molsight/num/adam.hpp"

namespace molsight::num {

void Adam::ensure_state(const std::vector<const Eigen::MatrixXd*>& grads) {
  if (!m_.empty()) {
    if (m_.size() != grads.size()) throw ShapeMismatch("Adam state tensor count changed");
    return;
  }
  for (const Eigen::MatrixXd* g : grads) {
    m_.push_back(Eigen::MatrixXd::Zero(g->rows(), g->cols()));
    v_.push_back(Eigen::MatrixXd::Zero(g->rows(), g->cols()));
  }
}

void Adam::step_tensors(std::vector<Eigen::MatrixXd*> params,
                        const std::vector<const Eigen::MatrixXd*>& grads) {
  if (params.size() != grads.size()) throw ShapeMismatch("Adam params/grads mismatch");
  ensure_state(grads);
  ++t_;
  double bc1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
  double bc2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
  for (size_t i = 0; i < params.size(); ++i) {
    if (params[i]->rows() != grads[i]->rows() || params[i]->cols() != grads[i]->cols())
      throw ShapeMismatch("Adam tensor shape mismatch");
    m_[i] = beta1_ * m_[i] + (1.0 - beta1_) * (*grads[i]);
    v_[i] = beta2_ * v_[i] + (1.0 - beta2_) * grads[i]->cwiseProduct(*grads[i]);
    Eigen::MatrixXd mhat = m_[i] / bc1;
    Eigen::MatrixXd vhat = v_[i] / bc2;
    params[i]->array() -= lr_ * mhat.array() / (vhat.array().sqrt() + eps_);
  }
}

void Adam::step(DenseNet& net, const Gradients& grads) {
  // biases as 1-column matrices alongside the weight tensors
  std::vector<Eigen::MatrixXd> bias_params;
  std::vector<Eigen::MatrixXd> bias_grads;
  bias_params.reserve(grads.b.size());
  bias_grads.reserve(grads.b.size());
  for (size_t l = 0; l < grads.b.size(); ++l) {
    bias_params.push_back(net.biases()[l]);
    bias_grads.push_back(grads.b[l]);
  }

  std::vector<Eigen::MatrixXd*> params;
  std::vector<const Eigen::MatrixXd*> gradient_ptrs;
  for (size_t l = 0; l < grads.w.size(); ++l) {
    params.push_back(&net.weights()[l]);
    gradient_ptrs.push_back(&grads.w[l]);
  }
  for (size_t l = 0; l < bias_params.size(); ++l) {
    params.push_back(&bias_params[l]);
    gradient_ptrs.push_back(&bias_grads[l]);
  }
  step_tensors(params, gradient_ptrs);
  for (size_t l = 0; l < bias_params.size(); ++l) net.biases()[l] = bias_params[l];
}

}  // namespace molsight::num
