//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <algorithm>
#include <cmath>

#include "molsight/attr/motif_extract.hpp"

namespace molsight::attr {

double percentile_linear(std::vector<double> values, double pct) {
  if (values.empty()) throw Error("percentile of empty sample");
  std::sort(values.begin(), values.end());
  if (values.size() == 1) return values[0];
  double h = (pct / 100.0) * static_cast<double>(values.size() - 1);
  double lo = std::floor(h);
  size_t i = static_cast<size_t>(lo);
  if (i + 1 >= values.size()) return values.back();
  return values[i] + (h - lo) * (values[i + 1] - values[i]);
}

std::vector<MotifCandidate> extract_motifs(const chem::Molecule& mol,
                                           const Eigen::VectorXd& scores, double percentile,
                                           int top_k, double ring_boost) {
  if (mol.atom_count() == 0) throw EmptyMolecule("extract_motifs on empty molecule");
  if (scores.size() != mol.atom_count())
    throw ShapeMismatch("extract_motifs: score length != atom count");
  if (top_k < 1) throw Error("extract_motifs: k must be >= 1");

  std::vector<double> all(scores.data(), scores.data() + scores.size());
  double threshold = percentile_linear(all, percentile);

  std::vector<int> high;
  for (int i = 0; i < mol.atom_count(); ++i)
    if (scores[i] > threshold) high.push_back(i);

  std::vector<MotifCandidate> candidates;
  for (const auto& comp : chem::connected_components(mol, high)) {
    MotifCandidate cand;
    cand.atoms = comp;
    cand.origin = MotifCandidate::Origin::Component;
    for (int a : comp) cand.score += scores[a];
    candidates.push_back(std::move(cand));
  }
  for (const auto& ring : mol.rings()) {
    MotifCandidate cand;
    cand.atoms = ring;
    std::sort(cand.atoms.begin(), cand.atoms.end());
    cand.origin = MotifCandidate::Origin::Ring;
    for (int a : cand.atoms) cand.score += scores[a];
    cand.score *= ring_boost;
    candidates.push_back(std::move(cand));
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const MotifCandidate& a, const MotifCandidate& b) {
              if (a.score != b.score) return a.score > b.score;
              if (a.atoms.front() != b.atoms.front()) return a.atoms.front() < b.atoms.front();
              return a.origin == MotifCandidate::Origin::Ring &&
                     b.origin == MotifCandidate::Origin::Component;
            });

  std::vector<MotifCandidate> selected;
  std::vector<char> taken(mol.atom_count(), 0);
  for (const MotifCandidate& cand : candidates) {
    if (static_cast<int>(selected.size()) == top_k) break;
    bool overlap = false;
    for (int a : cand.atoms) {
      if (taken[a]) {
        overlap = true;
        break;
      }
    }
    if (overlap) continue;
    for (int a : cand.atoms) taken[a] = 1;
    selected.push_back(cand);
  }
  return selected;
}

}  // namespace molsight::attr
