//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
// Ertl, Rohde & Selzer, J. Med. Chem. 2000, 43, 3714-3717 (Table 1).
// Unmatched N/O environments fall back to the documented linear estimate,
// floored at zero. S/P contributions are included only when requested.
#include <vector>

#include "molsight/desc/descriptors.hpp"

namespace molsight::desc {

using chem::BondOrder;
using chem::Element;
using chem::Molecule;
using chem::Neighbor;

namespace {

struct Env {
  Element elem;
  int charge = 0;
  bool aromatic = false;
  int h = 0;
  int deg = 0;           // heavy neighbors
  int singles = 0;       // non-aromatic single bonds
  int doubles = 0;
  int triples = 0;
  int aromatics = 0;     // aromatic-order bonds
  bool in_3ring = false;
};

Env environment(const Molecule& mol, int i) {
  Env env;
  const chem::Atom& a = mol.atom(i);
  env.elem = a.element;
  env.charge = a.formal_charge;
  env.aromatic = a.aromatic;
  env.h = a.total_h();
  env.deg = mol.heavy_degree(i);
  for (const Neighbor& nb : mol.neighbors(i)) {
    switch (mol.bond(nb.bond).order) {
      case BondOrder::Single: ++env.singles; break;
      case BondOrder::Double: ++env.doubles; break;
      case BondOrder::Triple: ++env.triples; break;
      case BondOrder::Aromatic: ++env.aromatics; break;
    }
  }
  for (const auto& ring : mol.rings()) {
    if (ring.size() != 3) continue;
    for (int r : ring) {
      if (r == i) {
        env.in_3ring = true;
        break;
      }
    }
  }
  return env;
}

double nitrogen_contribution(const Env& e) {
  if (!e.aromatic) {
    if (e.charge == 0) {
      if (e.h == 0) {
        if (e.deg == 3 && e.singles == 3 && e.doubles == 0 && e.triples == 0)
          return e.in_3ring ? 3.01 : 3.24;
        if (e.deg == 2 && e.singles == 1 && e.doubles == 1) return 12.36;
        if (e.deg == 1 && e.triples == 1) return 23.79;
        if (e.deg == 3 && e.singles == 1 && e.doubles == 2) return 11.68;
        if (e.deg == 2 && e.doubles == 1 && e.triples == 1) return 13.60;
      } else if (e.h == 1) {
        if (e.deg == 2 && e.singles == 2) return e.in_3ring ? 21.94 : 12.03;
        if (e.deg == 1 && e.doubles == 1) return 23.85;
      } else if (e.h == 2) {
        if (e.deg == 1 && e.singles == 1) return 26.02;
      }
    } else if (e.charge == 1) {
      if (e.h == 0) {
        if (e.deg == 4 && e.singles == 4) return 0.00;
        if (e.deg == 3 && e.singles == 2 && e.doubles == 1) return 3.01;
        if (e.deg == 2 && e.singles == 1 && e.triples == 1) return 4.36;
      } else if (e.h == 1) {
        if (e.deg == 3 && e.singles == 3) return 4.44;
        if (e.deg == 2 && e.singles == 1 && e.doubles == 1) return 13.97;
      } else if (e.h == 2) {
        if (e.deg == 2 && e.singles == 2) return 16.61;
        if (e.deg == 1 && e.doubles == 1) return 25.59;
      } else if (e.h == 3) {
        if (e.deg == 1 && e.singles == 1) return 27.64;
      }
    }
  } else {
    if (e.charge == 0) {
      if (e.deg == 2 && e.aromatics == 2 && e.h == 0) return 12.89;
      if (e.deg == 3 && e.aromatics == 3 && e.h == 0) return 4.41;
      if (e.deg == 3 && e.aromatics == 2 && e.singles == 1 && e.h == 0) return 4.93;
      if (e.deg == 3 && e.aromatics == 2 && e.doubles == 1 && e.h == 0) return 8.39;
      if (e.deg == 2 && e.aromatics == 2 && e.h == 1) return 15.79;
    } else if (e.charge == 1) {
      if (e.deg == 3 && e.aromatics == 3 && e.h == 0) return 4.10;
      if (e.deg == 3 && e.aromatics == 2 && e.singles == 1 && e.h == 0) return 3.88;
      if (e.deg == 2 && e.aromatics == 2 && e.h == 1) return 14.14;
    }
  }
  // fallback estimate
  double v = 30.5 - 8.2 * (e.deg + e.h) + 1.5 * e.h;
  return v > 0 ? v : 0.0;
}

double oxygen_contribution(const Env& e) {
  if (!e.aromatic) {
    if (e.charge == 0) {
      if (e.h == 0) {
        if (e.deg == 2 && e.singles == 2) return e.in_3ring ? 12.53 : 9.23;
        if (e.deg == 1 && e.doubles == 1) return 17.07;
      } else if (e.h == 1) {
        if (e.deg == 1 && e.singles == 1) return 20.23;
      }
    } else if (e.charge == -1) {
      if (e.deg == 1 && e.singles == 1 && e.h == 0) return 23.06;
    }
  } else {
    if (e.deg == 2 && e.aromatics == 2 && e.charge == 0) return 13.14;
  }
  double v = 28.5 - 8.6 * (e.deg + e.h) + 1.5 * e.h;
  return v > 0 ? v : 0.0;
}

double sulfur_contribution(const Env& e) {
  if (e.charge != 0) return 0.0;
  if (!e.aromatic) {
    if (e.h == 0) {
      if (e.deg == 2 && e.singles == 2) return 25.30;
      if (e.deg == 1 && e.doubles == 1) return 32.09;
      if (e.deg == 3 && e.singles == 2 && e.doubles == 1) return 19.21;
      if (e.deg == 4 && e.singles == 2 && e.doubles == 2) return 8.38;
    } else if (e.h == 1) {
      if (e.deg == 1 && e.singles == 1) return 38.80;
    }
  } else {
    if (e.deg == 2 && e.aromatics == 2) return 28.24;
    if (e.deg == 3 && e.aromatics == 2 && e.doubles == 1) return 21.70;
  }
  return 0.0;
}

double phosphorus_contribution(const Env& e) {
  if (e.charge != 0 || e.aromatic) return 0.0;
  if (e.h == 0) {
    if (e.deg == 3 && e.singles == 3) return 13.59;
    if (e.deg == 2 && e.singles == 1 && e.doubles == 1) return 34.14;
    if (e.deg == 4 && e.singles == 3 && e.doubles == 1) return 9.81;
  } else if (e.h == 1) {
    if (e.deg == 3 && e.singles == 2 && e.doubles == 1) return 23.47;
  }
  return 0.0;
}

}  // namespace

std::vector<double> tpsa_atom_contributions(const chem::Molecule& mol, bool include_s_p) {
  std::vector<double> contrib(mol.atom_count(), 0.0);
  for (int i = 0; i < mol.atom_count(); ++i) {
    Element e = mol.atom(i).element;
    if (e != Element::N && e != Element::O &&
        !(include_s_p && (e == Element::S || e == Element::P)))
      continue;
    Env env = environment(mol, i);
    switch (e) {
      case Element::N: contrib[i] = nitrogen_contribution(env); break;
      case Element::O: contrib[i] = oxygen_contribution(env); break;
      case Element::S: contrib[i] = sulfur_contribution(env); break;
      case Element::P: contrib[i] = phosphorus_contribution(env); break;
      default: break;
    }
  }
  return contrib;
}

double ertl_tpsa(const chem::Molecule& mol, bool include_s_p) {
  double sum = 0.0;
  for (double c : tpsa_atom_contributions(mol, include_s_p)) sum += c;
  return sum;
}

}  // namespace molsight::desc
