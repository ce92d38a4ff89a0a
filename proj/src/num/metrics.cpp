//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "molsight/common.hpp"
#include "molsight/num/metrics.hpp"

namespace molsight::num {

namespace {

void check_binary(const Eigen::VectorXd& scores, const Eigen::VectorXd& labels,
                  long& n_pos, long& n_neg) {
  if (scores.size() != labels.size() || scores.size() < 2)
    throw ShapeMismatch("metrics need >= 2 samples with matching sizes");
  n_pos = 0;
  n_neg = 0;
  for (Eigen::Index i = 0; i < labels.size(); ++i) {
    if (labels[i] > 0.5)
      ++n_pos;
    else
      ++n_neg;
  }
}

}  // namespace

double auroc(const Eigen::VectorXd& scores, const Eigen::VectorXd& labels) {
  long n_pos = 0, n_neg = 0;
  check_binary(scores, labels, n_pos, n_neg);
  if (n_pos == 0 || n_neg == 0)
    throw SingleClass("AUROC undefined with a single class");

  std::vector<int> idx(scores.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return scores[a] < scores[b]; });

  // midranks over tie groups
  double rank_sum_pos = 0.0;
  size_t i = 0;
  while (i < idx.size()) {
    size_t j = i;
    while (j + 1 < idx.size() && scores[idx[j + 1]] == scores[idx[i]]) ++j;
    double midrank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (size_t k = i; k <= j; ++k) {
      if (labels[idx[k]] > 0.5) rank_sum_pos += midrank;
    }
    i = j + 1;
  }
  double u = rank_sum_pos - static_cast<double>(n_pos) * (n_pos + 1) / 2.0;
  return u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

double average_precision(const Eigen::VectorXd& scores, const Eigen::VectorXd& labels) {
  long n_pos = 0, n_neg = 0;
  check_binary(scores, labels, n_pos, n_neg);
  if (n_pos == 0) throw SingleClass("average precision undefined without positives");

  std::vector<int> idx(scores.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return scores[a] > scores[b]; });

  double ap = 0.0;
  double tp = 0.0, fp = 0.0, prev_recall = 0.0;
  size_t i = 0;
  while (i < idx.size()) {
    size_t j = i;
    while (j + 1 < idx.size() && scores[idx[j + 1]] == scores[idx[i]]) ++j;
    for (size_t k = i; k <= j; ++k) {
      if (labels[idx[k]] > 0.5)
        tp += 1.0;
      else
        fp += 1.0;
    }
    double recall = tp / static_cast<double>(n_pos);
    double precision = tp / (tp + fp);
    ap += (recall - prev_recall) * precision;
    prev_recall = recall;
    i = j + 1;
  }
  return ap;
}

std::optional<double> pearson_r(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw ShapeMismatch("pearson_r needs >= 2 samples with matching sizes");
  double mx = x.mean(), my = y.mean();
  Eigen::ArrayXd cx = x.array() - mx;
  Eigen::ArrayXd cy = y.array() - my;
  double sx = std::sqrt((cx * cx).sum());
  double sy = std::sqrt((cy * cy).sum());
  if (sx == 0.0 || sy == 0.0) return std::nullopt;
  return (cx * cy).sum() / (sx * sy);
}

double r2_score(const Eigen::VectorXd& pred, const Eigen::VectorXd& target) {
  if (pred.size() != target.size() || pred.size() < 2)
    throw ShapeMismatch("r2_score needs >= 2 samples with matching sizes");
  double mean = target.mean();
  double ss_tot = (target.array() - mean).square().sum();
  if (ss_tot == 0.0) throw Error("r2_score undefined for constant targets");
  double ss_res = (target - pred).array().square().sum();
  return 1.0 - ss_res / ss_tot;
}

ClassificationMetrics classification_metrics(const Eigen::VectorXd& scores,
                                             const Eigen::VectorXd& labels) {
  return {auroc(scores, labels), average_precision(scores, labels)};
}

RegressionMetrics regression_metrics(const Eigen::VectorXd& pred,
                                     const Eigen::VectorXd& target) {
  auto r = pearson_r(pred, target);
  return {r2_score(pred, target), r.value_or(0.0)};
}

}  // namespace molsight::num
