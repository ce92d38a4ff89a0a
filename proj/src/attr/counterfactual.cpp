//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <algorithm>

#include "molsight/attr/counterfactual.hpp"
#include "molsight/chem/sanitize.hpp"
#include "molsight/chem/smiles.hpp"

namespace molsight::attr {

ScanResult counterfactual_scan(const chem::Molecule& mol,
                               const std::vector<MotifCandidate>& motifs,
                               const std::vector<TransformationRule>& rules,
                               const desc::DescriptorOptions& opts) {
  ScanResult scan;
  scan.qed_before = desc::compute_descriptors(mol, opts).drug_likeness;
  scan.best_per_motif.assign(motifs.size(), std::nullopt);

  for (size_t mi = 0; mi < motifs.size(); ++mi) {
    const MotifCandidate& motif = motifs[mi];
    for (const TransformationRule& rule : rules) {
      std::vector<std::vector<int>> sites = smarts::match_mappings(rule.pattern, mol, true);
      for (const std::vector<int>& site : sites) {
        int edited = site[rule.edit_atom];
        if (!std::binary_search(motif.atoms.begin(), motif.atoms.end(), edited)) continue;

        CounterfactualResult res;
        res.motif_index = static_cast<int>(mi);
        res.rule = rule.name;
        res.site = site;
        res.qed_before = scan.qed_before;
        try {
          chem::Molecule product = apply_rule(mol, rule, site);
          chem::SanitizeResult ok = chem::sanitize(product);
          if (!ok.ok()) {
            scan.rejects.push_back(
                {static_cast<int>(mi), rule.name, site, ok.message});
            continue;
          }
          res.product_smiles = chem::write_smiles(product);
          res.qed_after = desc::compute_descriptors(product, opts).drug_likeness;
          res.delta_qed = res.qed_after - res.qed_before;
        } catch (const Error& e) {
          scan.rejects.push_back({static_cast<int>(mi), rule.name, site, e.what()});
          continue;
        }

        scan.results.push_back(std::move(res));
        int idx = static_cast<int>(scan.results.size()) - 1;
        auto& best = scan.best_per_motif[mi];
        if (!best || scan.results[idx].delta_qed > scan.results[*best].delta_qed) best = idx;
      }
    }
  }
  return scan;
}

}  // namespace molsight::attr
