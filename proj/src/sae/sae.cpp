//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "molsight/num/adam.hpp"
#include "molsight/num/metrics.hpp"
#include "molsight/num/scaler.hpp"
#include "molsight/sae/sae.hpp"

namespace molsight::sae {

using Eigen::MatrixXd;
using Eigen::VectorXd;

SaeBatchGradients sae_batch_gradients(const SaeModel& model, const MatrixXd& x,
                                      const MatrixXd* dropout_mask) {
  const SaeConfig& config = model.config;
  const int k = static_cast<int>(model.encoder_w.rows());
  double batch = static_cast<double>(x.rows());

  MatrixXd z_pre =
      (x * model.encoder_w.transpose()).rowwise() + model.encoder_b.transpose();
  MatrixXd z = z_pre.cwiseMax(0.0);
  MatrixXd z_dropped = dropout_mask ? z.cwiseProduct(*dropout_mask) : z;
  MatrixXd x_hat =
      (z_dropped * model.decoder_w.transpose()).rowwise() + model.decoder_b.transpose();
  MatrixXd diff = x_hat - x;

  SaeBatchGradients g;
  g.loss = diff.array().square().sum() / batch + config.l1 * z.array().sum() / batch;

  MatrixXd d_xhat = 2.0 * diff / batch;
  g.decoder_w = d_xhat.transpose() * z_dropped;
  g.decoder_b = d_xhat.colwise().sum();
  MatrixXd d_z = d_xhat * model.decoder_w;
  if (dropout_mask) d_z = d_z.cwiseProduct(*dropout_mask);
  d_z.array() += config.l1 / batch;

  if (config.kl_sparsity_aux) {
    VectorXd rho_hat = z.colwise().mean();
    double rho = config.target_sparsity;
    for (int c = 0; c < k; ++c) {
      double p = std::clamp(rho_hat[c], 1e-6, 1.0 - 1e-6);
      g.loss += config.kl_weight *
                (rho * std::log(rho / p) + (1 - rho) * std::log((1 - rho) / (1 - p)));
      double d_rho = config.kl_weight * (-rho / p + (1 - rho) / (1 - p));
      d_z.col(c).array() += d_rho / batch;
    }
  }

  MatrixXd d_zpre = (z_pre.array() > 0.0).cast<double>().matrix().cwiseProduct(d_z);
  g.encoder_w = d_zpre.transpose() * x;
  g.encoder_b = d_zpre.colwise().sum();
  return g;
}

SaeTrainResult train_sae(const MatrixXd& h, const SaeConfig& config) {
  const int n = static_cast<int>(h.rows());
  const int d = static_cast<int>(h.cols());
  const int k = config.factors;
  if (n < 1) throw ShapeMismatch("train_sae needs at least 1 row");
  if (k <= 0) throw Error("train_sae: factor count must be positive");

  num::Rng rng(config.seed);
  double eb = std::sqrt(6.0 / d);
  double db = std::sqrt(6.0 / k);
  SaeModel model;
  model.config = config;
  model.encoder_w.resize(k, d);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < d; ++c) model.encoder_w(r, c) = rng.uniform(-eb, eb);
  model.encoder_b = VectorXd::Zero(k);
  model.decoder_w.resize(d, k);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < k; ++c) model.decoder_w(r, c) = rng.uniform(-db, db);
  model.decoder_b = VectorXd::Zero(d);

  num::Adam adam(config.learning_rate);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);

  std::vector<double> epoch_loss;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    rng.shuffle(order);
    double loss_sum = 0.0;
    for (int start = 0; start < n; start += config.batch_size) {
      int bs = std::min(config.batch_size, n - start);
      MatrixXd x(bs, d);
      for (int i = 0; i < bs; ++i) x.row(i) = h.row(order[start + i]);

      MatrixXd mask;
      if (config.dropout > 0.0) {
        mask.resize(bs, k);
        double scale = 1.0 / (1.0 - config.dropout);
        for (int r = 0; r < bs; ++r)
          for (int c = 0; c < k; ++c)
            mask(r, c) = rng.next_double() < config.dropout ? 0.0 : scale;
      }

      SaeBatchGradients g =
          sae_batch_gradients(model, x, config.dropout > 0.0 ? &mask : nullptr);
      if (!std::isfinite(g.loss))
        throw NonFiniteLoss("SAE loss diverged at epoch " + std::to_string(epoch) +
                            ", batch offset " + std::to_string(start));
      loss_sum += g.loss * bs;

      MatrixXd g_enc_b_m = g.encoder_b;
      MatrixXd g_dec_b_m = g.decoder_b;
      MatrixXd enc_b_m = model.encoder_b;
      MatrixXd dec_b_m = model.decoder_b;
      std::vector<Eigen::MatrixXd*> params = {&model.encoder_w, &enc_b_m,
                                              &model.decoder_w, &dec_b_m};
      std::vector<const Eigen::MatrixXd*> grads = {&g.encoder_w, &g_enc_b_m, &g.decoder_w,
                                                   &g_dec_b_m};
      adam.step_tensors(params, grads);
      model.encoder_b = enc_b_m;
      model.decoder_b = dec_b_m;
    }
    epoch_loss.push_back(loss_sum / n);
  }

  return {std::move(model), std::move(epoch_loss)};
}

MatrixXd encode(const SaeModel& model, const MatrixXd& h) {
  if (h.cols() != model.encoder_w.cols())
    throw ShapeMismatch("encode: embedding width mismatch");
  MatrixXd z = ((h * model.encoder_w.transpose()).rowwise() +
                model.encoder_b.transpose())
                   .cwiseMax(0.0);
  return z;
}

SparsityReport sparsity_report(const MatrixXd& z, double threshold) {
  if (z.rows() == 0 || z.cols() == 0) throw ShapeMismatch("sparsity_report on empty matrix");
  SparsityReport rep;
  rep.threshold = threshold;
  rep.activation_frequency =
      (z.array() > threshold).cast<double>().colwise().mean();
  const VectorXd& f = rep.activation_frequency;
  rep.mean = f.mean();
  rep.stddev = std::sqrt((f.array() - rep.mean).square().mean());
  rep.min = f.minCoeff();
  rep.max = f.maxCoeff();
  return rep;
}

CorrelationResult factor_reward_correlations(const MatrixXd& z, const MatrixXd& rewards,
                                             int top_k) {
  if (z.rows() != rewards.rows())
    throw ShapeMismatch("factor_reward_correlations: row count mismatch");
  const int k = static_cast<int>(z.cols());
  const int s = static_cast<int>(rewards.cols());
  CorrelationResult res;
  res.r = MatrixXd::Zero(k, s);

  std::vector<char> factor_const(k, 0), signal_const(s, 0);
  for (int i = 0; i < k; ++i) {
    double sd = std::sqrt((z.col(i).array() - z.col(i).mean()).square().mean());
    if (sd == 0.0) {
      factor_const[i] = 1;
      res.constant_factors.push_back(i);
    }
  }
  for (int j = 0; j < s; ++j) {
    double sd = std::sqrt((rewards.col(j).array() - rewards.col(j).mean()).square().mean());
    if (sd == 0.0) {
      signal_const[j] = 1;
      res.constant_signals.push_back(j);
    }
  }

  for (int i = 0; i < k; ++i) {
    if (factor_const[i]) continue;
    for (int j = 0; j < s; ++j) {
      if (signal_const[j]) continue;
      auto r = num::pearson_r(z.col(i), rewards.col(j));
      res.r(i, j) = r.value_or(0.0);
    }
  }

  std::vector<TopPair> pairs;
  pairs.reserve(static_cast<size_t>(k) * s);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < s; ++j) pairs.push_back({i, j, res.r(i, j)});
  std::sort(pairs.begin(), pairs.end(), [](const TopPair& a, const TopPair& b) {
    double aa = std::abs(a.r), ab = std::abs(b.r);
    if (aa != ab) return aa > ab;
    if (a.factor != b.factor) return a.factor < b.factor;
    return a.signal < b.signal;
  });
  if (top_k >= 0 && static_cast<int>(pairs.size()) > top_k) pairs.resize(top_k);
  res.top_pairs = std::move(pairs);
  return res;
}

namespace {

SignalPredictionScore fit_one_signal_mlp(const MatrixXd& z_train, const VectorXd& y_train,
                                         const MatrixXd& z_test, const VectorXd& y_test,
                                         const std::string& name,
                                         const RewardPredictorConfig& cfg,
                                         std::uint64_t seed) {
  num::Scaler scaler = num::Scaler::fit(z_train);
  MatrixXd xtr = scaler.transform(z_train);
  MatrixXd xte = scaler.transform(z_test);

  double y_mean = y_train.mean();
  double y_std = std::sqrt((y_train.array() - y_mean).square().mean());
  if (y_std < 1e-12) y_std = 1e-12;
  VectorXd ytr = (y_train.array() - y_mean) / y_std;

  num::DenseNet net = num::DenseNet::create(
      {static_cast<int>(z_train.cols()), cfg.hidden, 1}, seed, {cfg.dropout});
  num::Adam adam(cfg.learning_rate);
  num::Rng rng(seed ^ 0x9E3779B97F4A7C15ull);

  const int n = static_cast<int>(xtr.rows());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    rng.shuffle(order);
    for (int start = 0; start < n; start += cfg.batch_size) {
      int bs = std::min(cfg.batch_size, n - start);
      MatrixXd xb(bs, xtr.cols());
      MatrixXd yb(bs, 1);
      for (int i = 0; i < bs; ++i) {
        xb.row(i) = xtr.row(order[start + i]);
        yb(i, 0) = ytr[order[start + i]];
      }
      num::ForwardCache cache;
      MatrixXd pred = net.forward(xb, num::Mode::Train, &rng, &cache);
      num::LossGrad lg = num::mse_loss(pred, yb);
      if (!std::isfinite(lg.loss))
        throw NonFiniteLoss("reward predictor diverged for signal " + name);
      num::Gradients g = net.backward(cache, lg.grad);
      adam.step(net, g);
    }
  }

  auto predict = [&](const MatrixXd& x) {
    MatrixXd out = net.forward(x, num::Mode::Eval);
    return VectorXd((out.col(0).array() * y_std) + y_mean);
  };
  SignalPredictionScore score;
  score.signal = name;
  score.train_r2 = num::r2_score(predict(xtr), y_train);
  score.test_r2 = num::r2_score(predict(xte), y_test);
  return score;
}

SignalPredictionScore fit_one_signal_linear(const MatrixXd& z_train, const VectorXd& y_train,
                                            const MatrixXd& z_test, const VectorXd& y_test,
                                            const std::string& name) {
  // least squares with a bias column and a tiny ridge term
  MatrixXd a(z_train.rows(), z_train.cols() + 1);
  a << z_train, MatrixXd::Ones(z_train.rows(), 1);
  MatrixXd ata = a.transpose() * a;
  ata.diagonal().array() += 1e-8;
  VectorXd w = ata.ldlt().solve(a.transpose() * y_train);

  auto predict = [&](const MatrixXd& z) {
    MatrixXd x(z.rows(), z.cols() + 1);
    x << z, MatrixXd::Ones(z.rows(), 1);
    return VectorXd(x * w);
  };
  SignalPredictionScore score;
  score.signal = name;
  score.train_r2 = num::r2_score(predict(z_train), y_train);
  score.test_r2 = num::r2_score(predict(z_test), y_test);
  return score;
}

}  // namespace

std::vector<SignalPredictionScore> train_reward_predictor(
    const MatrixXd& z, const MatrixXd& rewards, const std::vector<std::string>& signal_names,
    const num::Split& split, const RewardPredictorConfig& config) {
  if (z.rows() != rewards.rows())
    throw ShapeMismatch("train_reward_predictor: row count mismatch");
  if (static_cast<int>(signal_names.size()) != rewards.cols())
    throw ShapeMismatch("train_reward_predictor: signal name count mismatch");

  MatrixXd z_train = num::take_rows(z, split.train);
  MatrixXd z_test = num::take_rows(z, split.test);

  std::vector<SignalPredictionScore> scores;
  for (int j = 0; j < rewards.cols(); ++j) {
    VectorXd y = rewards.col(j);
    VectorXd y_train = num::take_elems(y, split.train);
    VectorXd y_test = num::take_elems(y, split.test);
    std::uint64_t seed = num::derive_seed(config.seed, "reward-predictor/" + signal_names[j]);
    if (config.kind == RewardPredictorConfig::Kind::Mlp) {
      scores.push_back(fit_one_signal_mlp(z_train, y_train, z_test, y_test, signal_names[j],
                                          config, seed));
    } else {
      scores.push_back(
          fit_one_signal_linear(z_train, y_train, z_test, y_test, signal_names[j]));
    }
  }
  return scores;
}

}  // namespace molsight::sae
