//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace molsight::io {

/// Run configuration. Sources in precedence order: built-in defaults, an
/// INI-style config file ([section] + key = value, '#' comments), then CLI
/// overrides. The hash of the canonical key=value listing is embedded in
/// every artifact.
struct RunConfig {
  // [paths]
  std::string corpus;
  std::string embeddings;
  std::string motifs;       // motif library file; empty = shipped default
  std::string rules;        // transformation rules file; empty = shipped default
  std::string output_dir = "out";
  std::string surrogate;    // surrogate checkpoint path (input for counterfactual)
  std::string descriptors_csv;  // precomputed descriptors (optional ingestion path)
  std::string alerts;       // QED structural-alert SMARTS file; empty = none

  // [run]
  std::uint64_t master_seed = 42;
  int threads = 1;
  double test_fraction = 0.1;
  int sample_molecules = 8;  // saliency/counterfactual sample size in analyze

  // [harness]
  int harness_dim = 256;
  double harness_sigma = 0.5;
  bool harness_nonlinear = false;
  int harness_corpus_size = 2000;

  // [sae]
  int sae_factors = 128;
  double sae_l1 = 0.01;
  int sae_epochs = 200;
  int sae_batch = 128;
  double sae_lr = 1e-3;
  double sae_dropout = 0.1;
  bool sae_kl_aux = false;
  double sae_target_sparsity = 0.05;
  double sae_kl_weight = 0.1;
  int sae_top_pairs = 10;

  // [predictor]
  std::string predictor_kind = "mlp";  // mlp | linear
  int predictor_hidden = 64;
  int predictor_epochs = 100;
  int predictor_batch = 128;
  double predictor_lr = 1e-3;
  double predictor_dropout = 0.2;

  // [probe]
  int probe_epochs = 50;
  int probe_batch = 128;
  double probe_lr = 1e-3;
  double probe_dropout = 0.2;
  std::string probe_balancing = "oversample";  // oversample | weight

  // [ig]
  int ig_steps = 64;
  double ig_percentile = 75.0;
  double ig_ring_boost = 1.1;
  int ig_top_k = 3;
  std::string ig_baseline = "zero";  // zero | mean

  // [surrogate]
  int surrogate_epochs = 200;
  int surrogate_batch = 32;
  double surrogate_lr = 1e-3;

  // [descriptors]
  std::string qed_weights = "mean";  // mean | unit
  bool tpsa_include_s_p = false;

  static RunConfig load_file(const std::string& path);
  /// key in "section.key" form; throws Error on unknown keys or bad values.
  void apply_override(const std::string& key, const std::string& value);

  std::string canonical_text() const;
  std::string config_hash() const;  // fnv1a64 hex of canonical_text
  std::uint64_t stage_seed(std::string_view stage) const;
};

}  // namespace molsight::io
