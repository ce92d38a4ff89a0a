//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "molsight/common.hpp"

namespace molsight::harness {

struct PlantedSignal {
  enum class Kind { Descriptor, Motif };
  Kind kind = Kind::Descriptor;
  std::string name;  // reward signal name or motif name
  double gain = 3.0;
};

struct PlantedSpec {
  int dim = 256;
  std::vector<PlantedSignal> signals;
  double noise_sigma = 0.5;
  bool nonlinear_mix = false;
  std::uint64_t seed = 1;

  /// Six descriptor signals plus eight motif signals. Component axes carry
  /// more gain than the composite drug-likeness score, so the embedding
  /// geometry mirrors a policy that organizes reward along physicochemical
  /// axes rather than around the composite.
  static PlantedSpec default_spec();
};

struct GroundTruthLedger {
  struct Entry {
    PlantedSignal signal;
    Eigen::VectorXd carrier;  // unit vector in embedding space
  };
  std::vector<Entry> entries;
  int dim = 0;
  double noise_sigma = 0;
  std::uint64_t seed = 0;
  bool nonlinear_mix = false;

  std::string to_json() const;
};

struct EmbeddingResult {
  Eigen::MatrixXd h;  // N x dim
  GroundTruthLedger ledger;
};

/// H = sum_j gain_j * standardized(source_j) * carrier_j^T (+ optional tanh
/// interaction terms) + N(0, sigma^2) noise, carriers orthonormal. Throws
/// SpecInvalid on unknown/constant sources or dependent carriers.
EmbeddingResult generate_embeddings(const Eigen::MatrixXd& reward_signals,
                                    const std::vector<std::string>& reward_names,
                                    const Eigen::MatrixXd& motif_labels,
                                    const std::vector<std::string>& motif_names,
                                    const PlantedSpec& spec);

}  // namespace molsight::harness
