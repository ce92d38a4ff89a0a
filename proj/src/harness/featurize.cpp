//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include "molsight/harness/featurize.hpp"

#include "molsight/desc/descriptors.hpp"

namespace molsight::harness {

Eigen::MatrixXd featurize_atoms(const chem::Molecule& mol) {
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(mol.atom_count(), kAtomFeatureWidth);
  std::vector<double> crippen = desc::crippen_atom_contributions(mol);
  std::vector<double> tpsa = desc::tpsa_atom_contributions(mol);
  for (int i = 0; i < mol.atom_count(); ++i) {
    const chem::Atom& a = mol.atom(i);
    x(i, static_cast<int>(a.element)) = 1.0;
    x(i, 10) = a.formal_charge;
    x(i, 11) = a.aromatic ? 1.0 : 0.0;
    x(i, 12) = mol.heavy_degree(i);
    x(i, 13) = a.total_h();
    x(i, 14) = mol.atom_in_ring(i) ? 1.0 : 0.0;
    x(i, 15) = crippen[i];
    x(i, 16) = tpsa[i];
    x(i, 17) = (chem::atomic_weight(a.element) + a.total_h() * chem::kHydrogenWeight) / 100.0;
  }
  return x;
}

}  // namespace molsight::harness
