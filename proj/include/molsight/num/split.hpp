//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "molsight/num/rng.hpp"

namespace molsight::num {

struct Split {
  std::vector<int> train;
  std::vector<int> test;
};

/// Seeded shuffle split; indices come back sorted so iteration order is
/// stable. SAE and probe analyses share one split by sharing the seed.
inline Split split_indices(int n, double test_fraction, std::uint64_t seed) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  Rng rng(seed);
  rng.shuffle(idx);
  int n_test = static_cast<int>(std::lround(n * test_fraction));
  n_test = std::clamp(n_test, 0, n);
  Split split;
  split.test.assign(idx.begin(), idx.begin() + n_test);
  split.train.assign(idx.begin() + n_test, idx.end());
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

inline Eigen::MatrixXd take_rows(const Eigen::MatrixXd& m, const std::vector<int>& rows) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()), m.cols());
  for (size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = m.row(rows[i]);
  return out;
}

inline Eigen::VectorXd take_elems(const Eigen::VectorXd& v, const std::vector<int>& rows) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[rows[i]];
  return out;
}

}  // namespace molsight::num
