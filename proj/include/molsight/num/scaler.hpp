//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace molsight::num {

/// Per-feature standardization (population std, floor 1e-8).
class Scaler {
 public:
  Scaler() = default;

  static Scaler fit(const Eigen::MatrixXd& x);
  Eigen::MatrixXd transform(const Eigen::MatrixXd& x) const;

  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::VectorXd& stddev() const { return std_; }

  /// Provenance hash over the fitted parameters (leakage audits).
  std::uint64_t params_hash() const;

  Scaler(Eigen::VectorXd mean, Eigen::VectorXd stddev)
      : mean_(std::move(mean)), std_(std::move(stddev)) {}

 private:
  Eigen::VectorXd mean_;
  Eigen::VectorXd std_;
};

}  // namespace molsight::num
