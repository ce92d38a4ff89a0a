//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <cmath>

#include "molsight/num/dense_net.hpp"

namespace molsight::num {

DenseNet::DenseNet(std::vector<int> dims, std::vector<double> dropout,
                   std::vector<Eigen::MatrixXd> weights, std::vector<Eigen::VectorXd> biases)
    : dims_(std::move(dims)),
      dropout_(std::move(dropout)),
      weights_(std::move(weights)),
      biases_(std::move(biases)) {}

DenseNet DenseNet::create(const std::vector<int>& dims, std::uint64_t seed,
                          std::vector<double> dropout) {
  if (dims.size() < 2) throw Error("DenseNet needs at least input and output dims");
  int hidden = static_cast<int>(dims.size()) - 2;
  if (dropout.empty()) dropout.assign(hidden, 0.0);
  if (static_cast<int>(dropout.size()) != hidden)
    throw Error("dropout list must have one entry per hidden layer");
  for (double p : dropout)
    if (p < 0.0 || p >= 1.0) throw Error("dropout rate must be in [0,1)");

  Rng rng(seed);
  std::vector<Eigen::MatrixXd> weights;
  std::vector<Eigen::VectorXd> biases;
  for (size_t l = 0; l + 1 < dims.size(); ++l) {
    int fan_in = dims[l];
    int fan_out = dims[l + 1];
    double bound = std::sqrt(6.0 / fan_in);
    Eigen::MatrixXd w(fan_out, fan_in);
    for (int r = 0; r < fan_out; ++r)
      for (int c = 0; c < fan_in; ++c) w(r, c) = rng.uniform(-bound, bound);
    weights.push_back(std::move(w));
    biases.push_back(Eigen::VectorXd::Zero(fan_out));
  }
  return DenseNet(dims, std::move(dropout), std::move(weights), std::move(biases));
}

Eigen::MatrixXd DenseNet::forward(const Eigen::MatrixXd& x, Mode mode, Rng* rng,
                                  ForwardCache* cache) const {
  if (x.cols() != input_dim())
    throw ShapeMismatch("forward: batch width " + std::to_string(x.cols()) +
                        " != input dim " + std::to_string(input_dim()));
  if (cache) {
    cache->inputs.clear();
    cache->preacts.clear();
    cache->masks.clear();
  }

  Eigen::MatrixXd h = x;
  const int layers = layer_count();
  for (int l = 0; l < layers; ++l) {
    if (cache) cache->inputs.push_back(h);
    Eigen::MatrixXd z = (h * weights_[l].transpose()).rowwise() + biases_[l].transpose();
    if (cache) cache->preacts.push_back(z);
    if (l + 1 < layers) {
      h = z.cwiseMax(0.0);
      double p = dropout_[l];
      if (mode == Mode::Train && p > 0.0) {
        if (!rng) throw Error("train-mode dropout needs an rng");
        Eigen::MatrixXd mask(h.rows(), h.cols());
        double scale = 1.0 / (1.0 - p);
        for (Eigen::Index r = 0; r < h.rows(); ++r)
          for (Eigen::Index c = 0; c < h.cols(); ++c)
            mask(r, c) = rng->next_double() < p ? 0.0 : scale;
        h = h.cwiseProduct(mask);
        if (cache) cache->masks.push_back(std::move(mask));
      } else if (cache) {
        cache->masks.push_back(Eigen::MatrixXd::Ones(h.rows(), h.cols()));
      }
    } else {
      h = z;
    }
  }
  if (cache) cache->valid = true;
  return h;
}

Gradients DenseNet::backward(const ForwardCache& cache, const Eigen::MatrixXd& out_grad,
                             bool want_input_grad) const {
  if (!cache.valid || cache.inputs.size() != static_cast<size_t>(layer_count()))
    throw MissingCache("backward without a matching forward cache");

  const int layers = layer_count();
  Gradients g;
  g.w.resize(layers);
  g.b.resize(layers);

  Eigen::MatrixXd delta = out_grad;  // dLoss/dPreact of output layer (linear head)
  for (int l = layers - 1; l >= 0; --l) {
    g.w[l] = delta.transpose() * cache.inputs[l];
    g.b[l] = delta.colwise().sum();
    if (l > 0) {
      Eigen::MatrixXd back = delta * weights_[l];
      // through dropout then ReLU of the previous hidden layer
      back = back.cwiseProduct(cache.masks[l - 1]);
      back = (cache.preacts[l - 1].array() > 0.0).cast<double>().matrix().cwiseProduct(back);
      delta = std::move(back);
    } else if (want_input_grad) {
      g.input = delta * weights_[0];
    }
  }
  return g;
}

LossGrad mse_loss(const Eigen::MatrixXd& pred, const Eigen::MatrixXd& target) {
  if (pred.rows() != target.rows() || pred.cols() != target.cols())
    throw ShapeMismatch("mse_loss shape mismatch");
  Eigen::MatrixXd diff = pred - target;
  double batch = static_cast<double>(pred.rows());
  LossGrad lg;
  lg.loss = diff.array().square().sum() / batch;
  lg.grad = 2.0 * diff / batch;
  return lg;
}

LossGrad bce_with_logits(const Eigen::MatrixXd& logits, const Eigen::VectorXd& labels,
                         double pos_weight) {
  if (logits.cols() != 1 || logits.rows() != labels.size())
    throw ShapeMismatch("bce_with_logits expects one logit per sample");
  double batch = static_cast<double>(logits.rows());
  LossGrad lg;
  lg.grad.resize(logits.rows(), 1);
  double total = 0.0;
  for (Eigen::Index i = 0; i < logits.rows(); ++i) {
    double z = logits(i, 0);
    double y = labels[i];
    double w = y > 0.5 ? pos_weight : 1.0;
    // log(1 + exp(-|z|)) is stable for both signs
    double log1pexp = std::log1p(std::exp(-std::abs(z)));
    double loss = std::max(z, 0.0) - z * y + log1pexp;
    total += w * loss;
    double sigma = 1.0 / (1.0 + std::exp(-z));
    lg.grad(i, 0) = w * (sigma - y) / batch;
  }
  lg.loss = total / batch;
  return lg;
}

}  // namespace molsight::num
