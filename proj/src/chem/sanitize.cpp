//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include "molsight/chem/sanitize.hpp"

#include "molsight/chem/perception.hpp"

namespace molsight::chem {

SanitizeResult sanitize(const Molecule& mol) {
  // aromatic bond endpoints
  for (int i = 0; i < mol.bond_count(); ++i) {
    const Bond& b = mol.bond(i);
    bool arom_order = b.order == BondOrder::Aromatic;
    if ((arom_order || b.aromatic) &&
        !(mol.atom(b.a).aromatic && mol.atom(b.b).aromatic)) {
      return {SanitizeResult::Kind::AromaticityBroken, b.a,
              "aromatic bond joins a non-aromatic atom"};
    }
  }

  // aromatic subgraph must admit a kekule assignment
  bool has_aromatic = false;
  for (int i = 0; i < mol.bond_count(); ++i)
    if (mol.bond(i).order == BondOrder::Aromatic) has_aromatic = true;
  if (has_aromatic) {
    Molecule copy = mol;
    try {
      detail::kekulize_flagged(copy);
      copy.finalize(true);
    } catch (const KekulizationError&) {
      return {SanitizeResult::Kind::AromaticityBroken, -1,
              "aromatic system admits no alternating bond assignment"};
    } catch (const ValenceError& e) {
      return {SanitizeResult::Kind::ValenceExceeded, e.atom(), e.what()};
    }
    // hydrogen counts must survive kekulization unchanged
    for (int i = 0; i < mol.atom_count(); ++i) {
      if (copy.atom(i).total_h() != mol.atom(i).total_h()) {
        return {SanitizeResult::Kind::AromaticityBroken, i,
                "aromatic hydrogen count inconsistent at atom " + std::to_string(i)};
      }
    }
  }

  // element valences and charge sanity
  for (int i = 0; i < mol.atom_count(); ++i) {
    const Atom& a = mol.atom(i);
    auto vmax = max_valence(a.element, a.formal_charge);
    if (!vmax) {
      return {SanitizeResult::Kind::ValenceExceeded, i,
              "no valence model for charge state of atom " + std::to_string(i)};
    }
    double order_sum = mol.bond_order_sum(i);
    // an atom inside an aromatic system owns one of the two shared pi bonds
    int n_arom = 0;
    bool has_multiple = false;
    for (const Neighbor& nb : mol.neighbors(i)) {
      BondOrder o = mol.bond(nb.bond).order;
      if (o == BondOrder::Aromatic) ++n_arom;
      if (o == BondOrder::Double || o == BondOrder::Triple) has_multiple = true;
    }
    double valence;
    if (n_arom > 0) {
      ValenceList v = default_valences(a.element, a.formal_charge);
      int pi = (!has_multiple && !v.empty() &&
                *v.begin() - mol.heavy_degree(i) - a.total_h() >= 1)
                   ? 1
                   : 0;
      // sigma frame plus the one owned pi bond; aromatic halves not double-counted
      valence = mol.heavy_degree(i) + pi + a.total_h();
      for (const Neighbor& nb : mol.neighbors(i)) {
        BondOrder o = mol.bond(nb.bond).order;
        if (o == BondOrder::Double) valence += 1;
        if (o == BondOrder::Triple) valence += 2;
      }
    } else {
      valence = order_sum + a.total_h();
    }
    if (valence > *vmax + 1e-9) {
      return {SanitizeResult::Kind::ValenceExceeded, i,
              "valence " + std::to_string(valence) + " exceeds maximum at atom " +
                  std::to_string(i)};
    }
  }

  return {};
}

}  // namespace molsight::chem
