//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "molsight/num/dense_net.hpp"
#include "molsight/num/scaler.hpp"
#include "molsight/num/split.hpp"

namespace molsight::probe {

struct ProbeConfig {
  std::vector<int> hidden = {256, 128, 64};
  int epochs = 50;
  int batch_size = 128;
  double learning_rate = 1e-3;
  double dropout = 0.2;
  std::uint64_t seed = 0;
  enum class Balancing { Oversample, PosWeight };
  Balancing balancing = Balancing::Oversample;
  // Probes are independent; each derives its own seed, so results are
  // byte-identical at any thread count.
  int threads = 1;
};

struct ProbeModel {
  num::DenseNet net;
  num::Scaler scaler;  // fit on the training split only
  std::string motif;
  std::uint64_t scaler_hash = 0;
};

struct ProbeReportRow {
  std::string motif;
  double prevalence = 0;
  std::optional<double> auroc;  // absent when the test split is single-class
  double average_precision = 0;
  int train_size = 0;
  int test_size = 0;
  int epochs = 0;
  bool skipped = false;
  std::string skip_reason;
  std::uint64_t scaler_hash = 0;
};

/// Per-motif classifier on frozen embeddings with class-balanced sampling.
/// Throws SingleClass when the training split has one class.
ProbeModel train_probe(const Eigen::MatrixXd& h, const Eigen::VectorXd& labels,
                       const std::vector<int>& train_indices, const ProbeConfig& config,
                       const std::string& motif_name = "");

/// Probe scores (sigmoid of the logit) for arbitrary rows.
Eigen::VectorXd probe_scores(const ProbeModel& model, const Eigen::MatrixXd& h);

/// Metrics on a held-out split; single-class test data yields AP + a flag.
ProbeReportRow evaluate_probe(const ProbeModel& model, const Eigen::MatrixXd& h_test,
                              const Eigen::VectorXd& labels_test);

struct ProbeSuiteResult {
  std::vector<ProbeReportRow> rows;  // library order
  double mean_auroc = 0;             // over evaluated motifs
  int evaluated = 0;
};

/// One probe per label column; single-class motifs are skipped with a reason.
ProbeSuiteResult probe_suite(const Eigen::MatrixXd& h, const Eigen::MatrixXd& label_matrix,
                             const std::vector<std::string>& motif_names,
                             const num::Split& split, const ProbeConfig& config);

/// Pearson matrix over binary label columns; unit diagonal for non-constant
/// columns, constant columns flagged and zeroed.
Eigen::MatrixXd motif_cooccurrence_correlation(const Eigen::MatrixXd& label_matrix,
                                               std::vector<int>* constant_columns = nullptr);

}  // namespace molsight::probe
