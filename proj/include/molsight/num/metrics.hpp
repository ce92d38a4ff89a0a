//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <Eigen/Core>
#include <optional>

namespace molsight::num {

/// Mann-Whitney rank statistic with midranks for ties.
/// Throws SingleClass when only one label value is present.
double auroc(const Eigen::VectorXd& scores, const Eigen::VectorXd& labels);

/// Area under the precision-recall curve via step interpolation
/// (sum over descending thresholds of (R_k - R_{k-1}) * P_k).
double average_precision(const Eigen::VectorXd& scores, const Eigen::VectorXd& labels);

/// nullopt when either input is constant.
std::optional<double> pearson_r(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

/// 1 - SS_res/SS_tot; throws on constant targets.
double r2_score(const Eigen::VectorXd& pred, const Eigen::VectorXd& target);

struct ClassificationMetrics {
  double auroc = 0;
  double average_precision = 0;
};
struct RegressionMetrics {
  double r2 = 0;
  double pearson = 0;
};

ClassificationMetrics classification_metrics(const Eigen::VectorXd& scores,
                                             const Eigen::VectorXd& labels);
RegressionMetrics regression_metrics(const Eigen::VectorXd& pred,
                                     const Eigen::VectorXd& target);

}  // namespace molsight::num
