//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <algorithm>
#include <cmath>
#include <numeric>

#include "molsight/harness/surrogate.hpp"
#include "molsight/num/adam.hpp"
#include "molsight/num/exact_sum.hpp"
#include "molsight/num/metrics.hpp"
#include "molsight/num/split.hpp"

namespace molsight::harness {

using Eigen::MatrixXd;
using Eigen::RowVectorXd;
using Eigen::VectorXd;

SurrogateModel::SurrogateModel(num::DenseNet atom_net, num::DenseNet head_net)
    : atom_net_(std::move(atom_net)), head_net_(std::move(head_net)) {}

SurrogateModel SurrogateModel::create(int feature_width, const SurrogateConfig& config) {
  std::vector<int> atom_dims{feature_width};
  for (int w : config.atom_hidden) atom_dims.push_back(w);
  std::vector<int> head_dims{atom_dims.back()};
  for (int w : config.head_hidden) head_dims.push_back(w);
  head_dims.push_back(1);
  num::DenseNet atom_net =
      num::DenseNet::create(atom_dims, num::derive_seed(config.seed, "surrogate/atom"));
  num::DenseNet head_net =
      num::DenseNet::create(head_dims, num::derive_seed(config.seed, "surrogate/head"));
  return SurrogateModel(std::move(atom_net), std::move(head_net));
}

void SurrogateModel::set_normalization(Eigen::RowVectorXd mean, Eigen::RowVectorXd scale) {
  feat_mean_ = std::move(mean);
  feat_scale_ = std::move(scale);
}

MatrixXd SurrogateModel::normalize(const MatrixXd& atom_features) const {
  if (feat_mean_.size() == 0) return atom_features;
  return (atom_features.rowwise() - feat_mean_).array().rowwise() /
         feat_scale_.array();
}

RowVectorXd SurrogateModel::pool(const MatrixXd& atom_hidden) const {
  RowVectorXd pooled(atom_hidden.cols());
  for (Eigen::Index c = 0; c < atom_hidden.cols(); ++c) {
    num::ExactSum acc;
    for (Eigen::Index r = 0; r < atom_hidden.rows(); ++r) acc.add(atom_hidden(r, c));
    pooled[c] = acc.value();
  }
  return pooled;
}

namespace {

// The atom net has no output nonlinearity, so its last layer output feeds the
// pooled head directly; but hidden semantics of DenseNet treat the final
// layer as linear. Keep a ReLU on the pooled activation path by letting the
// atom net's last configured width be a hidden layer of the overall model:
// apply ReLU explicitly after the atom net.
MatrixXd relu(const MatrixXd& m) { return m.cwiseMax(0.0); }

}  // namespace

double SurrogateModel::value(const MatrixXd& atom_features) const {
  MatrixXd hidden = relu(atom_net_.forward(normalize(atom_features), num::Mode::Eval));
  RowVectorXd pooled = pool(hidden);
  MatrixXd out = head_net_.forward(pooled, num::Mode::Eval);
  return out(0, 0);
}

MatrixXd SurrogateModel::input_gradient(const MatrixXd& atom_features) const {
  num::ForwardCache atom_cache;
  MatrixXd atom_out =
      atom_net_.forward(normalize(atom_features), num::Mode::Eval, nullptr, &atom_cache);
  MatrixXd hidden = relu(atom_out);
  RowVectorXd pooled = pool(hidden);

  num::ForwardCache head_cache;
  head_net_.forward(pooled, num::Mode::Eval, nullptr, &head_cache);
  MatrixXd one = MatrixXd::Ones(1, 1);
  num::Gradients head_g = head_net_.backward(head_cache, one, true);

  // d(pooled)/d(atom_out): broadcast rows, gated by the explicit ReLU
  MatrixXd datom_out = (atom_out.array() > 0.0).cast<double>().matrix();
  for (Eigen::Index r = 0; r < datom_out.rows(); ++r)
    datom_out.row(r) = datom_out.row(r).cwiseProduct(head_g.input.row(0));

  num::Gradients atom_g = atom_net_.backward(atom_cache, datom_out, true);
  if (feat_mean_.size() == 0) return atom_g.input;
  // chain through the affine normalization back to raw features
  return atom_g.input.array().rowwise() / feat_scale_.array();
}

SurrogateFit train_surrogate(SurrogateModel& model, const std::vector<MatrixXd>& features,
                             const VectorXd& targets, const SurrogateConfig& config) {
  const int n = static_cast<int>(features.size());
  if (n < 2 || targets.size() != n)
    throw ShapeMismatch("train_surrogate: features/targets size mismatch");

  num::Split split = num::split_indices(n, config.test_fraction,
                                        num::derive_seed(config.seed, "surrogate/split"));
  num::Rng rng(num::derive_seed(config.seed, "surrogate/shuffle"));
  num::Adam adam(config.learning_rate);

  // per-feature normalization fitted on training-split atoms
  {
    const Eigen::Index width = features[0].cols();
    RowVectorXd mean = RowVectorXd::Zero(width);
    long total = 0;
    for (int i : split.train) {
      mean += features[i].colwise().sum();
      total += features[i].rows();
    }
    mean /= static_cast<double>(total);
    RowVectorXd var = RowVectorXd::Zero(width);
    for (int i : split.train)
      var += (features[i].rowwise() - mean).array().square().colwise().sum().matrix();
    RowVectorXd scale = (var / static_cast<double>(total)).array().sqrt();
    for (Eigen::Index c = 0; c < width; ++c)
      if (scale[c] < 1e-8) scale[c] = 1.0;
    model.set_normalization(mean, scale);
  }

  std::vector<int> order = split.train;
  SurrogateFit fit;

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    rng.shuffle(order);
    double loss_sum = 0.0;
    for (size_t start = 0; start < order.size();
         start += static_cast<size_t>(config.batch_molecules)) {
      size_t bs = std::min(static_cast<size_t>(config.batch_molecules), order.size() - start);

      num::Gradients atom_acc, head_acc;
      double batch_loss = 0.0;
      for (size_t bi = 0; bi < bs; ++bi) {
        int idx = order[start + bi];
        MatrixXd x = model.normalize(features[idx]);

        num::ForwardCache atom_cache;
        MatrixXd atom_out =
            model.atom_net().forward(x, num::Mode::Train, &rng, &atom_cache);
        MatrixXd hidden = atom_out.cwiseMax(0.0);
        RowVectorXd pooled(hidden.cols());
        for (Eigen::Index c = 0; c < hidden.cols(); ++c) {
          num::ExactSum acc;
          for (Eigen::Index r = 0; r < hidden.rows(); ++r) acc.add(hidden(r, c));
          pooled[c] = acc.value();
        }
        num::ForwardCache head_cache;
        MatrixXd pred = model.head_net().forward(pooled, num::Mode::Train, &rng, &head_cache);

        double diff = pred(0, 0) - targets[idx];
        batch_loss += diff * diff;
        double dpred = 2.0 * diff / static_cast<double>(bs);

        MatrixXd dout = MatrixXd::Constant(1, 1, dpred);
        num::Gradients head_g = model.head_net().backward(head_cache, dout, true);

        MatrixXd datom_out = (atom_out.array() > 0.0).cast<double>().matrix();
        for (Eigen::Index r = 0; r < datom_out.rows(); ++r)
          datom_out.row(r) = datom_out.row(r).cwiseProduct(head_g.input.row(0));
        num::Gradients atom_g = model.atom_net().backward(atom_cache, datom_out);

        auto accumulate = [](num::Gradients& acc, const num::Gradients& g) {
          if (acc.w.empty()) {
            acc = g;
            return;
          }
          for (size_t l = 0; l < g.w.size(); ++l) {
            acc.w[l] += g.w[l];
            acc.b[l] += g.b[l];
          }
        };
        accumulate(atom_acc, atom_g);
        accumulate(head_acc, head_g);
      }
      batch_loss /= static_cast<double>(bs);
      if (!std::isfinite(batch_loss))
        throw NonFiniteLoss("surrogate loss diverged at epoch " + std::to_string(epoch));
      loss_sum += batch_loss * static_cast<double>(bs);

      // single optimizer step over both nets
      std::vector<Eigen::MatrixXd> bias_params, bias_grads;
      std::vector<Eigen::MatrixXd*> params;
      std::vector<const Eigen::MatrixXd*> grads;
      auto enlist = [&](num::DenseNet& net, num::Gradients& g) {
        for (size_t l = 0; l < g.w.size(); ++l) {
          params.push_back(&net.weights()[l]);
          grads.push_back(&g.w[l]);
        }
      };
      enlist(model.atom_net(), atom_acc);
      enlist(model.head_net(), head_acc);
      size_t atom_layers = atom_acc.b.size();
      for (size_t l = 0; l < atom_acc.b.size(); ++l) {
        bias_params.push_back(model.atom_net().biases()[l]);
        bias_grads.push_back(atom_acc.b[l]);
      }
      for (size_t l = 0; l < head_acc.b.size(); ++l) {
        bias_params.push_back(model.head_net().biases()[l]);
        bias_grads.push_back(head_acc.b[l]);
      }
      for (size_t l = 0; l < bias_params.size(); ++l) {
        params.push_back(&bias_params[l]);
        grads.push_back(&bias_grads[l]);
      }
      adam.step_tensors(params, grads);
      for (size_t l = 0; l < atom_layers; ++l) model.atom_net().biases()[l] = bias_params[l];
      for (size_t l = 0; l < head_acc.b.size(); ++l)
        model.head_net().biases()[l] = bias_params[atom_layers + l];
    }
    fit.epoch_loss.push_back(loss_sum / static_cast<double>(order.size()));
  }

  auto evaluate = [&](const std::vector<int>& rows, double* mse) {
    VectorXd pred(rows.size()), truth(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
      pred[static_cast<Eigen::Index>(i)] = model.value(features[rows[i]]);
      truth[static_cast<Eigen::Index>(i)] = targets[rows[i]];
    }
    if (mse) *mse = (pred - truth).array().square().mean();
    try {
      return num::r2_score(pred, truth);
    } catch (const Error&) {
      return 0.0;  // constant targets: R^2 undefined, MSE carries the signal
    }
  };
  fit.train_r2 = evaluate(split.train, nullptr);
  fit.test_r2 = evaluate(split.test, &fit.test_mse);
  return fit;
}

}  // namespace molsight::harness
