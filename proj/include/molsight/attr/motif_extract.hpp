//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <Eigen/Core>
#include <vector>

#include "molsight/chem/molecule.hpp"

namespace molsight::attr {

struct MotifCandidate {
  std::vector<int> atoms;  // sorted atom indices
  double score = 0;        // sum of member scores, ring-boosted for rings
  enum class Origin { Component, Ring };
  Origin origin = Origin::Component;
};

/// Linear (inclusive) percentile of a sample.
double percentile_linear(std::vector<double> values, double pct);

/// Candidates are connected components of atoms scoring strictly above the
/// percentile threshold plus every SSSR ring (ring scores boosted); the top-k
/// non-overlapping candidates are selected greedily by descending score with
/// (score, smallest member index) tie-break. Throws EmptyMolecule.
std::vector<MotifCandidate> extract_motifs(const chem::Molecule& mol,
                                           const Eigen::VectorXd& scores,
                                           double percentile = 75.0, int top_k = 3,
                                           double ring_boost = 1.1);

}  // namespace molsight::attr
