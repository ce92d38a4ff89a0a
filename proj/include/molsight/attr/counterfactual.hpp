//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <optional>

#include "molsight/attr/motif_extract.hpp"
#include "molsight/attr/rules.hpp"
#include "molsight/desc/descriptors.hpp"

namespace molsight::attr {

struct CounterfactualResult {
  int motif_index = 0;
  std::string rule;
  std::vector<int> site;  // matched atom tuple in query-atom order
  std::string product_smiles;
  double qed_before = 0;
  double qed_after = 0;
  double delta_qed = 0;
  bool valid = true;
};

struct CounterfactualReject {
  int motif_index = 0;
  std::string rule;
  std::vector<int> site;
  std::string reason;
};

struct ScanResult {
  std::vector<CounterfactualResult> results;       // valid products only
  std::vector<CounterfactualReject> rejects;
  std::vector<std::optional<int>> best_per_motif;  // index into results
  double qed_before = 0;
};

/// For each motif, every rule whose edited atom lies inside the motif's atom
/// set is applied at each matching site; invalid products are dropped with
/// reasons, and the best edit per motif is the maximal delta QED with
/// (rule order, site order) tie-break.
ScanResult counterfactual_scan(const chem::Molecule& mol,
                               const std::vector<MotifCandidate>& motifs,
                               const std::vector<TransformationRule>& rules,
                               const desc::DescriptorOptions& opts = {});

}  // namespace molsight::attr
