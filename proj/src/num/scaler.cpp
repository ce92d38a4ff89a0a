//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <cstring>

#include "molsight/common.hpp"
#include "molsight/num/scaler.hpp"

namespace molsight::num {

Scaler Scaler::fit(const Eigen::MatrixXd& x) {
  if (x.rows() == 0) throw ShapeMismatch("Scaler::fit on empty matrix");
  Eigen::VectorXd mean = x.colwise().mean();
  Eigen::MatrixXd centered = x.rowwise() - mean.transpose();
  Eigen::VectorXd std = centered.array().square().colwise().mean().sqrt();
  for (Eigen::Index i = 0; i < std.size(); ++i)
    if (std[i] < 1e-8) std[i] = 1e-8;
  return Scaler(std::move(mean), std::move(std));
}

Eigen::MatrixXd Scaler::transform(const Eigen::MatrixXd& x) const {
  if (x.cols() != mean_.size())
    throw ShapeMismatch("Scaler::transform width mismatch");
  return (x.rowwise() - mean_.transpose()).array().rowwise() /
         std_.transpose().array();
}

std::uint64_t Scaler::params_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const Eigen::VectorXd& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      std::uint64_t bits;
      double d = v[i];
      std::memcpy(&bits, &d, sizeof(bits));
      for (int b = 0; b < 8; ++b) {
        h ^= (bits >> (8 * b)) & 0xFF;
        h *= 1099511628211ull;
      }
    }
  };
  mix(mean_);
  mix(std_);
  return h;
}

}  // namespace molsight::num
