//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <cmath>

#include "molsight/attr/integrated_gradients.hpp"

namespace molsight::attr {

AttributionMap integrated_gradients(const ScalarModel& model, const Eigen::MatrixXd& x,
                                    const Eigen::MatrixXd& baseline, int steps,
                                    BaselineKind kind) {
  if (x.rows() != baseline.rows() || x.cols() != baseline.cols())
    throw ShapeMismatch("integrated_gradients: baseline shape mismatch");
  if (steps < 1) throw Error("integrated_gradients: steps must be >= 1");

  Eigen::MatrixXd delta = x - baseline;
  Eigen::MatrixXd grad_sum = Eigen::MatrixXd::Zero(x.rows(), x.cols());
  for (int m = 1; m <= steps; ++m) {
    double t = static_cast<double>(m) / steps;
    Eigen::MatrixXd point = baseline + t * delta;
    Eigen::MatrixXd g = model.input_gradient(point);
    if (!g.allFinite())
      throw NonFiniteGradient("integrated_gradients: non-finite model gradient at step " +
                              std::to_string(m));
    grad_sum += g;
  }

  AttributionMap map;
  map.attributions = delta.cwiseProduct(grad_sum / static_cast<double>(steps));
  map.value = model.value(x);
  map.baseline_value = model.value(baseline);
  map.completeness_residual =
      std::abs(map.attributions.sum() - (map.value - map.baseline_value));
  map.baseline = kind;
  map.steps = steps;
  return map;
}

Eigen::VectorXd atom_scores(const AttributionMap& map) {
  return map.attributions.cwiseAbs().rowwise().sum();
}

}  // namespace molsight::attr
