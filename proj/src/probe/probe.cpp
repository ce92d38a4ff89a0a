//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "molsight/num/adam.hpp"
#include "molsight/num/metrics.hpp"
#include "molsight/probe/probe.hpp"

namespace molsight::probe {

using Eigen::MatrixXd;
using Eigen::VectorXd;

ProbeModel train_probe(const MatrixXd& h, const VectorXd& labels,
                       const std::vector<int>& train_indices, const ProbeConfig& config,
                       const std::string& motif_name) {
  std::vector<int> pos, neg;
  for (int i : train_indices) {
    (labels[i] > 0.5 ? pos : neg).push_back(i);
  }
  if (pos.empty() || neg.empty())
    throw SingleClass("probe training split has a single class for motif '" + motif_name +
                      "'");

  MatrixXd h_train = num::take_rows(h, train_indices);
  ProbeModel model;
  model.motif = motif_name;
  model.scaler = num::Scaler::fit(h_train);
  model.scaler_hash = model.scaler.params_hash();

  std::vector<int> dims;
  dims.push_back(static_cast<int>(h.cols()));
  for (int w : config.hidden) dims.push_back(w);
  dims.push_back(1);
  std::vector<double> dropout(config.hidden.size(), config.dropout);
  model.net = num::DenseNet::create(dims, num::derive_seed(config.seed, "probe/" + motif_name),
                                    dropout);

  num::Adam adam(config.learning_rate);
  num::Rng rng(num::derive_seed(config.seed, "probe-sampler/" + motif_name));

  double pos_weight = 1.0;
  if (config.balancing == ProbeConfig::Balancing::PosWeight)
    pos_weight = static_cast<double>(neg.size()) / static_cast<double>(pos.size());

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    std::vector<int> epoch_indices;
    if (config.balancing == ProbeConfig::Balancing::Oversample) {
      // oversample the minority class to 1:1 each epoch
      const std::vector<int>& minority = pos.size() < neg.size() ? pos : neg;
      const std::vector<int>& majority = pos.size() < neg.size() ? neg : pos;
      epoch_indices = majority;
      std::vector<int> cycle = minority;
      rng.shuffle(cycle);
      for (size_t i = 0; i < majority.size(); ++i)
        epoch_indices.push_back(cycle[i % cycle.size()]);
    } else {
      epoch_indices = train_indices;
    }
    rng.shuffle(epoch_indices);

    for (size_t start = 0; start < epoch_indices.size();
         start += static_cast<size_t>(config.batch_size)) {
      size_t bs = std::min(static_cast<size_t>(config.batch_size),
                           epoch_indices.size() - start);
      MatrixXd xb(static_cast<Eigen::Index>(bs), h.cols());
      VectorXd yb(static_cast<Eigen::Index>(bs));
      for (size_t i = 0; i < bs; ++i) {
        xb.row(static_cast<Eigen::Index>(i)) = h.row(epoch_indices[start + i]);
        yb[static_cast<Eigen::Index>(i)] = labels[epoch_indices[start + i]];
      }
      MatrixXd xs = model.scaler.transform(xb);
      num::ForwardCache cache;
      MatrixXd logits = model.net.forward(xs, num::Mode::Train, &rng, &cache);
      num::LossGrad lg = num::bce_with_logits(logits, yb, pos_weight);
      if (!std::isfinite(lg.loss))
        throw NonFiniteLoss("probe loss diverged for motif '" + motif_name + "'");
      num::Gradients g = model.net.backward(cache, lg.grad);
      adam.step(model.net, g);
    }
  }
  return model;
}

VectorXd probe_scores(const ProbeModel& model, const MatrixXd& h) {
  MatrixXd logits = model.net.forward(model.scaler.transform(h), num::Mode::Eval);
  return (1.0 / (1.0 + (-logits.col(0).array()).exp())).matrix();
}

ProbeReportRow evaluate_probe(const ProbeModel& model, const MatrixXd& h_test,
                              const VectorXd& labels_test) {
  ProbeReportRow row;
  row.motif = model.motif;
  row.test_size = static_cast<int>(h_test.rows());
  row.scaler_hash = model.scaler_hash;

  VectorXd scores = probe_scores(model, h_test);
  long n_pos = (labels_test.array() > 0.5).count();
  long n_neg = labels_test.size() - n_pos;
  if (n_pos == 0 || n_neg == 0) {
    row.skip_reason = "single-class test split: AUROC omitted";
    if (n_pos > 0) row.average_precision = 1.0;  // all positives, any ranking
    return row;
  }
  row.auroc = num::auroc(scores, labels_test);
  row.average_precision = num::average_precision(scores, labels_test);
  return row;
}

ProbeSuiteResult probe_suite(const MatrixXd& h, const MatrixXd& label_matrix,
                             const std::vector<std::string>& motif_names,
                             const num::Split& split, const ProbeConfig& config) {
  if (label_matrix.rows() != h.rows())
    throw ShapeMismatch("probe_suite: label row count mismatch");
  if (static_cast<int>(motif_names.size()) != label_matrix.cols())
    throw ShapeMismatch("probe_suite: motif name count mismatch");

  MatrixXd h_test = num::take_rows(h, split.test);
  const int n_motifs = static_cast<int>(label_matrix.cols());

  auto run_one = [&](int m) {
    VectorXd labels = label_matrix.col(m);

    ProbeReportRow row;
    row.motif = motif_names[m];
    row.prevalence = labels.mean();
    row.train_size = static_cast<int>(split.train.size());
    row.test_size = static_cast<int>(split.test.size());
    row.epochs = config.epochs;

    bool saw_pos = false, saw_neg = false;
    for (int i : split.train) {
      (labels[i] > 0.5 ? saw_pos : saw_neg) = true;
      if (saw_pos && saw_neg) break;
    }
    if (!(saw_pos && saw_neg)) {
      row.skipped = true;
      row.skip_reason = "single-class training labels";
      return row;
    }

    try {
      ProbeModel model = train_probe(h, labels, split.train, config, motif_names[m]);
      ProbeReportRow eval =
          evaluate_probe(model, h_test, num::take_elems(labels, split.test));
      row.auroc = eval.auroc;
      row.average_precision = eval.average_precision;
      row.scaler_hash = eval.scaler_hash;
      if (!eval.auroc) row.skip_reason = eval.skip_reason;
    } catch (const Error& e) {
      // per-motif failures are recorded, never fatal
      row.skipped = true;
      row.skip_reason = e.what();
    }
    return row;
  };

  ProbeSuiteResult result;
  result.rows.resize(n_motifs);
  if (config.threads > 1) {
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    int n_workers = std::min(config.threads, n_motifs);
    for (int w = 0; w < n_workers; ++w) {
      workers.emplace_back([&] {
        for (int m = next.fetch_add(1); m < n_motifs; m = next.fetch_add(1))
          result.rows[m] = run_one(m);
      });
    }
    for (auto& t : workers) t.join();
  } else {
    for (int m = 0; m < n_motifs; ++m) result.rows[m] = run_one(m);
  }

  double auroc_sum = 0.0;
  for (const ProbeReportRow& row : result.rows) {
    if (row.auroc) {
      auroc_sum += *row.auroc;
      ++result.evaluated;
    }
  }
  result.mean_auroc = result.evaluated > 0 ? auroc_sum / result.evaluated : 0.0;
  return result;
}

MatrixXd motif_cooccurrence_correlation(const MatrixXd& label_matrix,
                                        std::vector<int>* constant_columns) {
  if (label_matrix.rows() < 2)
    throw ShapeMismatch("motif_cooccurrence_correlation needs N >= 2");
  const int m = static_cast<int>(label_matrix.cols());
  MatrixXd r = MatrixXd::Zero(m, m);
  std::vector<char> constant(m, 0);
  for (int i = 0; i < m; ++i) {
    double sd = std::sqrt(
        (label_matrix.col(i).array() - label_matrix.col(i).mean()).square().mean());
    if (sd == 0.0) {
      constant[i] = 1;
      if (constant_columns) constant_columns->push_back(i);
    }
  }
  for (int i = 0; i < m; ++i) {
    if (constant[i]) continue;
    r(i, i) = 1.0;
    for (int j = i + 1; j < m; ++j) {
      if (constant[j]) continue;
      auto v = num::pearson_r(label_matrix.col(i), label_matrix.col(j));
      r(i, j) = r(j, i) = v.value_or(0.0);
    }
  }
  return r;
}

}  // namespace molsight::probe
