//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "molsight/num/split.hpp"

namespace molsight::sae {

struct SaeConfig {
  int factors = 128;  // code width k
  double l1 = 0.01;
  int epochs = 200;
  int batch_size = 128;
  double learning_rate = 1e-3;
  double dropout = 0.1;  // on the code during training
  std::uint64_t seed = 0;
  // Optional KL auxiliary penalty toward the target mean activation rate;
  // off by default (the l1 term is the primary sparsity mechanism), and
  // flagged in output metadata when enabled.
  bool kl_sparsity_aux = false;
  double target_sparsity = 0.05;
  double kl_weight = 0.1;
};

/// Single-layer ReLU autoencoder: z = ReLU(W h + b), h_hat = W' z + b'.
struct SaeModel {
  Eigen::MatrixXd encoder_w;  // k x d
  Eigen::VectorXd encoder_b;  // k
  Eigen::MatrixXd decoder_w;  // d x k
  Eigen::VectorXd decoder_b;  // d
  SaeConfig config;
};

struct SaeTrainResult {
  SaeModel model;
  std::vector<double> epoch_loss;  // per-epoch mean per-sample loss
};

/// Loss per sample: ||h - h_hat||^2 + l1 * ||z||_1. Deterministic given the
/// seed. Throws NonFiniteLoss with diagnostics on divergence.
SaeTrainResult train_sae(const Eigen::MatrixXd& h, const SaeConfig& config);

struct SaeBatchGradients {
  double loss = 0;
  Eigen::MatrixXd encoder_w;
  Eigen::VectorXd encoder_b;
  Eigen::MatrixXd decoder_w;
  Eigen::VectorXd decoder_b;
};

/// One batch of the training objective and its analytic gradients (the exact
/// computation the training loop applies; dropout_mask may be null). Exposed
/// so gradient checks can difference the real objective.
SaeBatchGradients sae_batch_gradients(const SaeModel& model, const Eigen::MatrixXd& x,
                                      const Eigen::MatrixXd* dropout_mask = nullptr);

/// Nonnegative factor activations, N x k.
Eigen::MatrixXd encode(const SaeModel& model, const Eigen::MatrixXd& h);

struct SparsityReport {
  Eigen::VectorXd activation_frequency;  // fraction of rows with z > threshold
  double threshold = 0.1;
  double mean = 0, stddev = 0, min = 0, max = 0;
};

SparsityReport sparsity_report(const Eigen::MatrixXd& z, double threshold = 0.1);

struct TopPair {
  int factor = 0;
  int signal = 0;
  double r = 0;
};

struct CorrelationResult {
  Eigen::MatrixXd r;  // factors x signals; constant columns recorded as 0
  std::vector<int> constant_factors;
  std::vector<int> constant_signals;
  std::vector<TopPair> top_pairs;  // |r| descending, ties by (factor, signal)
};

CorrelationResult factor_reward_correlations(const Eigen::MatrixXd& z,
                                             const Eigen::MatrixXd& rewards,
                                             int top_k = 10);

struct RewardPredictorConfig {
  enum class Kind { Mlp, Linear };
  Kind kind = Kind::Mlp;
  int hidden = 64;
  int epochs = 100;
  int batch_size = 128;
  double learning_rate = 1e-3;
  double dropout = 0.2;
  std::uint64_t seed = 0;
};

struct SignalPredictionScore {
  std::string signal;
  double train_r2 = 0;
  double test_r2 = 0;
};

/// Per-signal predictor (small MLP by default, closed-form linear optional)
/// trained on factors; reports train/test R^2 on the given split.
std::vector<SignalPredictionScore> train_reward_predictor(
    const Eigen::MatrixXd& z, const Eigen::MatrixXd& rewards,
    const std::vector<std::string>& signal_names, const num::Split& split,
    const RewardPredictorConfig& config);

}  // namespace molsight::sae
