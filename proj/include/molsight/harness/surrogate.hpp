//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <vector>

#include "molsight/attr/integrated_gradients.hpp"
#include "molsight/num/dense_net.hpp"

namespace molsight::harness {

struct SurrogateConfig {
  std::vector<int> atom_hidden = {64, 64};
  std::vector<int> head_hidden = {32};
  int epochs = 200;
  int batch_molecules = 32;
  double learning_rate = 1e-3;
  double test_fraction = 0.1;
  std::uint64_t seed = 0;
};

/// Per-atom MLP, exact sum pooling (bit-identical under atom permutation),
/// scalar head; trained against QED. Serves as the differentiable target for
/// integrated gradients.
class SurrogateModel : public attr::ScalarModel {
 public:
  SurrogateModel() = default;
  SurrogateModel(num::DenseNet atom_net, num::DenseNet head_net);

  static SurrogateModel create(int feature_width, const SurrogateConfig& config);

  double value(const Eigen::MatrixXd& atom_features) const override;
  Eigen::MatrixXd input_gradient(const Eigen::MatrixXd& atom_features) const override;

  const num::DenseNet& atom_net() const { return atom_net_; }
  const num::DenseNet& head_net() const { return head_net_; }
  num::DenseNet& atom_net() { return atom_net_; }
  num::DenseNet& head_net() { return head_net_; }

  /// Per-feature affine normalization fitted on the training corpus; the
  /// gradient path divides by the stored scale so IG sees raw features.
  void set_normalization(Eigen::RowVectorXd mean, Eigen::RowVectorXd scale);
  const Eigen::RowVectorXd& feature_mean() const { return feat_mean_; }
  const Eigen::RowVectorXd& feature_scale() const { return feat_scale_; }

  Eigen::MatrixXd normalize(const Eigen::MatrixXd& atom_features) const;

 private:
  num::DenseNet atom_net_;
  num::DenseNet head_net_;
  Eigen::RowVectorXd feat_mean_;   // empty = identity
  Eigen::RowVectorXd feat_scale_;

  Eigen::RowVectorXd pool(const Eigen::MatrixXd& atom_hidden) const;
};

struct SurrogateFit {
  double train_r2 = 0;
  double test_r2 = 0;
  double test_mse = 0;
  std::vector<double> epoch_loss;
};

/// Trains on (featurized atoms -> pooled -> scalar) vs targets with MSE.
/// Deterministic given the seed. Throws NonFiniteLoss.
SurrogateFit train_surrogate(SurrogateModel& model,
                             const std::vector<Eigen::MatrixXd>& features,
                             const Eigen::VectorXd& targets, const SurrogateConfig& config);

}  // namespace molsight::harness
