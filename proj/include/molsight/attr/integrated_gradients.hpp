//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <Eigen/Core>

#include "molsight/common.hpp"

namespace molsight::attr {

/// Differentiable scalar-output model over an atom-feature matrix.
struct ScalarModel {
  virtual ~ScalarModel() = default;
  virtual double value(const Eigen::MatrixXd& atom_features) const = 0;
  virtual Eigen::MatrixXd input_gradient(const Eigen::MatrixXd& atom_features) const = 0;
};

enum class BaselineKind { Zero, Mean };

struct AttributionMap {
  Eigen::MatrixXd attributions;  // atoms x features
  double value = 0;              // F(x)
  double baseline_value = 0;     // F(baseline)
  double completeness_residual = 0;
  BaselineKind baseline = BaselineKind::Zero;
  int steps = 0;
};

/// Right-endpoint Riemann approximation with interpolation points
/// baseline + (m/M)(x - baseline), m = 1..M. Throws NonFiniteGradient.
AttributionMap integrated_gradients(const ScalarModel& model, const Eigen::MatrixXd& x,
                                    const Eigen::MatrixXd& baseline, int steps,
                                    BaselineKind kind = BaselineKind::Zero);

/// Per-atom importance: sum of absolute attributions across features.
Eigen::VectorXd atom_scores(const AttributionMap& map);

}  // namespace molsight::attr
