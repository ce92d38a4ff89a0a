//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cmath>
#include <vector>

namespace molsight::num {

/// Shewchuk-style exact accumulator: the value of the sum is independent of
/// the order terms are added, so pooling stays bit-identical under atom
/// permutations.
class ExactSum {
 public:
  void add(double x) {
    size_t out = 0;
    for (double p : partials_) {
      if (std::abs(x) < std::abs(p)) std::swap(x, p);
      double hi = x + p;
      double lo = p - (hi - x);
      if (lo != 0.0) partials_[out++] = lo;
      x = hi;
    }
    partials_.resize(out);
    partials_.push_back(x);
  }

  /// Correctly rounded value of the exact sum (fsum-style finalization),
  /// hence identical for any insertion order.
  double value() const {
    size_t n = partials_.size();
    if (n == 0) return 0.0;
    double hi = partials_[--n];
    double lo = 0.0;
    while (n > 0) {
      double x = hi;
      double y = partials_[--n];
      hi = x + y;
      double yr = hi - x;
      lo = y - yr;
      if (lo != 0.0) break;
    }
    if (n > 0 && ((lo < 0.0 && partials_[n - 1] < 0.0) ||
                  (lo > 0.0 && partials_[n - 1] > 0.0))) {
      double y = lo * 2.0;
      double x = hi + y;
      double yr = x - hi;
      if (y == yr) hi = x;
    }
    return hi;
  }

  void reset() { partials_.clear(); }

 private:
  std::vector<double> partials_;
};

inline double exact_sum(const double* data, size_t n) {
  ExactSum acc;
  for (size_t i = 0; i < n; ++i) acc.add(data[i]);
  return acc.value();
}

}  // namespace molsight::num
