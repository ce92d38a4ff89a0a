//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
// Wildman & Crippen, J. Chem. Inf. Comput. Sci. 1999, 39, 868-873 (Table 1).
// Procedural atom typing; RDKit-compatible readings where the table leaves
// room (acid -OH as O2, S=O as S2, aromatic bridgeheads as C19).
#include <vector>

#include "molsight/desc/descriptors.hpp"

namespace molsight::desc {

using chem::Atom;
using chem::Bond;
using chem::BondOrder;
using chem::Element;
using chem::Molecule;
using chem::Neighbor;

namespace {

enum Type : int {
  kC1, kC2, kC3, kC4, kC5, kC6, kC7, kC8, kC9, kC10, kC11, kC12, kC13, kC14,
  kC15, kC16, kC17, kC18, kC19, kC20, kC21, kC22, kC23, kC24, kC25, kC26,
  kC27, kCS,
  kN1, kN2, kN3, kN4, kN5, kN6, kN7, kN8, kN9, kN10, kN11, kN12, kN13, kN14,
  kNS,
  kO1, kO2, kO3, kO4, kO5, kO6, kO7, kO8, kO9, kO10, kO11, kO12, kOS,
  kF, kCl, kBr, kI, kHal, kP, kS1, kS2, kS3, kMe1,
  kH1, kH2, kH3, kH4, kHS,
  kTypeCount
};

constexpr double kValue[kTypeCount] = {
    /* C1  */ 0.1441,  /* C2  */ 0.0000,  /* C3  */ -0.2035, /* C4  */ -0.2051,
    /* C5  */ -0.2783, /* C6  */ 0.1551,  /* C7  */ 0.00170, /* C8  */ 0.08452,
    /* C9  */ -0.1444, /* C10 */ -0.0516, /* C11 */ 0.1193,  /* C12 */ -0.0967,
    /* C13 */ -0.5443, /* C14 */ 0.0000,  /* C15 */ 0.2450,  /* C16 */ 0.1980,
    /* C17 */ 0.0000,  /* C18 */ 0.1581,  /* C19 */ 0.2955,  /* C20 */ 0.2713,
    /* C21 */ 0.1360,  /* C22 */ 0.4619,  /* C23 */ 0.5437,  /* C24 */ 0.1893,
    /* C25 */ -0.8186, /* C26 */ 0.2640,  /* C27 */ 0.2148,  /* CS  */ 0.08129,
    /* N1  */ -1.0190, /* N2  */ -0.7096, /* N3  */ -1.0270, /* N4  */ -0.5188,
    /* N5  */ 0.08387, /* N6  */ 0.1836,  /* N7  */ -0.3187, /* N8  */ -0.4458,
    /* N9  */ 0.01508, /* N10 */ -1.950,  /* N11 */ -0.3239, /* N12 */ -1.119,
    /* N13 */ -0.3396, /* N14 */ 0.2887,  /* NS  */ -0.4806,
    /* O1  */ 0.1552,  /* O2  */ -0.2893, /* O3  */ -0.0684, /* O4  */ -0.4195,
    /* O5  */ 0.0335,  /* O6  */ -0.3339, /* O7  */ -1.189,  /* O8  */ 0.1788,
    /* O9  */ -0.1526, /* O10 */ 0.1129,  /* O11 */ 0.4833,  /* O12 */ -1.326,
    /* OS  */ -0.1188,
    /* F   */ 0.4202,  /* Cl  */ 0.6895,  /* Br  */ 0.8456,  /* I   */ 0.8857,
    /* Hal */ -2.996,  /* P   */ 0.8612,  /* S1  */ 0.6482,  /* S2  */ -0.0024,
    /* S3  */ 0.6237,  /* Me1 */ -0.3808,
    /* H1  */ 0.1230,  /* H2  */ -0.2677, /* H3  */ 0.2142,  /* H4  */ 0.2980,
    /* HS  */ 0.1125,
};

struct Context {
  const Molecule& mol;
  std::vector<int> double_count;
  std::vector<int> triple_count;
  std::vector<int> aryl_count;
  std::vector<int> het_count;  // attached non-carbon heavy atoms

  explicit Context(const Molecule& m)
      : mol(m),
        double_count(m.atom_count(), 0),
        triple_count(m.atom_count(), 0),
        aryl_count(m.atom_count(), 0),
        het_count(m.atom_count(), 0) {
    for (int i = 0; i < m.atom_count(); ++i) {
      for (const Neighbor& nb : m.neighbors(i)) {
        const Bond& b = m.bond(nb.bond);
        if (b.order == BondOrder::Double) ++double_count[i];
        if (b.order == BondOrder::Triple) ++triple_count[i];
        if (m.atom(nb.atom).aromatic) ++aryl_count[i];
        if (m.atom(nb.atom).element != Element::C) ++het_count[i];
      }
    }
  }

  int unsaturation(int i) const { return double_count[i] + triple_count[i]; }

  int double_partner(int i) const {
    for (const Neighbor& nb : mol.neighbors(i)) {
      if (mol.bond(nb.bond).order == BondOrder::Double) return nb.atom;
    }
    return -1;
  }

  // count of neighbors with non-aromatic unsaturation
  int vinyl(int i) const {
    int rc = 0;
    for (const Neighbor& nb : mol.neighbors(i)) {
      if (mol.atom(nb.atom).aromatic) continue;
      if (unsaturation(nb.atom) > 0) ++rc;
    }
    return rc;
  }
};

int aromatic_carbon(const Context& cx, int i) {
  const Molecule& m = cx.mol;
  int deg = m.heavy_degree(i);
  if (deg == 2) return kC18;
  int n_arom_bonds = 0;
  int exo = -1, exo_bond = -1;
  for (const Neighbor& nb : m.neighbors(i)) {
    if (m.bond(nb.bond).order == BondOrder::Aromatic) {
      ++n_arom_bonds;
    } else {
      exo = nb.atom;
      exo_bond = nb.bond;
    }
  }
  if (deg == 3 && n_arom_bonds == 3) return kC19;
  if (exo < 0) return kCS;
  const Bond& b = m.bond(exo_bond);
  Element z = m.atom(exo).element;
  if (b.order == BondOrder::Double &&
      (z == Element::C || z == Element::N || z == Element::O))
    return kC25;
  if (z == Element::F) return kC14;
  if (z == Element::Cl) return kC15;
  if (z == Element::Br) return kC16;
  if (z == Element::I) return kC17;
  if (m.atom(exo).aromatic) return kC20;
  if (b.order == BondOrder::Single) {
    switch (z) {
      case Element::C: return kC21;
      case Element::N: return kC22;
      case Element::O: return kC23;
      case Element::S: return kC24;
      default: return kC13;
    }
  }
  return kCS;
}

int saturated_carbon(const Context& cx, int i) {
  const Molecule& m = cx.mol;
  int deg = m.heavy_degree(i);
  switch (deg) {
    case 0:
      return kC1;
    case 1: {
      int o = m.neighbors(i)[0].atom;
      if (m.atom(o).aromatic) return m.atom(o).element == Element::C ? kC8 : kC9;
      return m.atom(o).element == Element::C ? kC1 : kC3;
    }
    case 2:
      if (cx.aryl_count[i] > 0) return kC10;
      return cx.het_count[i] == 0 ? kC1 : kC3;
    case 3:
      if (cx.aryl_count[i] > 0) return kC11;
      return cx.het_count[i] == 0 ? kC2 : kC4;
    default:
      if (cx.aryl_count[i] > 0) return kC12;
      return cx.het_count[i] == 0 ? kC2 : kC4;
  }
}

int unsaturated_carbon(const Context& cx, int i) {
  const Molecule& m = cx.mol;
  if (cx.triple_count[i] > 0) {
    return m.atom(i).formal_charge == 0 ? kC7 : kCS;
  }
  int dbl = cx.double_partner(i);
  if (dbl < 0) return kCS;
  if (m.atom(dbl).element != Element::C) return kC5;
  return cx.aryl_count[i] == 0 ? kC6 : kC26;
}

bool is_nitro(const Context& cx, int i) {
  int n = 0;
  for (const Neighbor& nb : cx.mol.neighbors(i)) {
    if (cx.mol.bond(nb.bond).order == BondOrder::Double &&
        cx.mol.atom(nb.atom).element == Element::O)
      ++n;
  }
  return n == 2;
}

// terminal N on C or S carrying a double-bonded O/S (amide, sulfonamide)
bool terminal_amide_nitrogen(const Context& cx, int i) {
  const Molecule& m = cx.mol;
  int carbon = m.neighbors(i)[0].atom;
  Element cz = m.atom(carbon).element;
  if (cz != Element::C && cz != Element::S) return false;
  for (const Neighbor& nb : m.neighbors(carbon)) {
    if (m.bond(nb.bond).order != BondOrder::Double) continue;
    Element oz = m.atom(nb.atom).element;
    if (oz == Element::O || oz == Element::S) return true;
  }
  return false;
}

bool sulfonamide_nitrogen(const Context& cx, int i) {
  const Molecule& m = cx.mol;
  for (const Neighbor& nb : m.neighbors(i)) {
    int s = nb.atom;
    if (m.atom(s).element != Element::S) continue;
    if (cx.unsaturation(s) == 0) continue;
    for (const Neighbor& nb2 : m.neighbors(s)) {
      if (m.bond(nb2.bond).order == BondOrder::Double &&
          m.atom(nb2.atom).element == Element::O)
        return true;
    }
  }
  return false;
}

// NH2 on an amidine/guanidine carbon
bool amidine_nitrogen(const Context& cx, int i) {
  const Molecule& m = cx.mol;
  int carbon = m.neighbors(i)[0].atom;
  if (m.atom(carbon).element != Element::C) return false;
  if (m.atom(carbon).aromatic) return false;
  if (cx.double_count[carbon] != 1) return false;
  for (const Neighbor& nb : m.neighbors(carbon)) {
    if (m.bond(nb.bond).order == BondOrder::Double &&
        m.atom(nb.atom).element == Element::N)
      return true;
  }
  return false;
}

int saturated_nitrogen(const Context& cx, int i) {
  const Molecule& m = cx.mol;
  int deg = m.heavy_degree(i);
  int vinyl = cx.vinyl(i);
  int aryl = cx.aryl_count[i];
  int het = cx.het_count[i];

  if (deg == 1) {
    if (het == 0 && amidine_nitrogen(cx, i)) return kN1;
    if (het == 0 && vinyl == 0) {
      int o = m.neighbors(i)[0].atom;
      return m.atom(o).aromatic ? kN3 : kN1;
    }
    if (het == 0 && vinyl > 0 && terminal_amide_nitrogen(cx, i)) return kN1;
    if (het == 1 && vinyl > 0 && sulfonamide_nitrogen(cx, i)) return kN1;
    if (aryl == 1) return kN3;
    return kNS;
  }
  if (deg == 2) {
    if (het == 0 && vinyl == 0) return aryl > 0 ? kN4 : kN2;
    if (aryl > 0) return kN4;
    return kN2;
  }
  if (deg == 3) {
    if (het == 0 && vinyl == 0) return aryl > 0 ? kN8 : kN7;
    if (aryl > 0) return kN8;
    return kN7;
  }
  return kNS;
}

int unsaturated_nitrogen(const Context& cx, int i) {
  const Molecule& m = cx.mol;
  int deg = m.heavy_degree(i);
  if (deg == 1 && cx.triple_count[i] > 0 && cx.het_count[i] == 0) return kN9;
  if (deg == 3 && cx.double_count[i] == 2 && is_nitro(cx, i)) return kN13;
  if (deg == 1 && cx.double_count[i] == 1) return kN5;
  if (deg == 2 && cx.double_count[i] == 1 && cx.triple_count[i] == 0) return kN6;
  if (cx.triple_count[i] > 0 && cx.het_count[i] > 0) return kN14;
  return kNS;
}

int nitrogen(const Context& cx, int i) {
  const Atom& a = cx.mol.atom(i);
  if (a.aromatic) {
    if (a.formal_charge == 0)
      return (cx.mol.heavy_degree(i) == 3 && cx.double_count[i] >= 2) ? kN12 : kN11;
    return kN12;
  }
  if (a.formal_charge >= 1) {
    if (cx.triple_count[i] > 0) return kN14;
    if (a.total_h() > 0) return kN10;
    return kN13;
  }
  if (a.formal_charge <= -1) return kN14;
  if (cx.unsaturation(i) == 0) return saturated_nitrogen(cx, i);
  return unsaturated_nitrogen(cx, i);
}

int oxygen(const Context& cx, int i) {
  const Molecule& m = cx.mol;
  const Atom& a = m.atom(i);
  if (a.aromatic) return kO1;

  if (cx.double_count[i] > 0) {
    int o = cx.double_partner(i);
    Element z = m.atom(o).element;
    if (z == Element::N) return kO5;
    if (z == Element::C && m.atom(o).aromatic) return kO8;
    if (z == Element::S) return kO6;
    if (z == Element::C) {
      if (cx.het_count[o] == 3) return kO11;
      if (cx.aryl_count[o] > 0) return kO10;
      return kO9;
    }
    return kOS;
  }

  int deg = m.heavy_degree(i);
  if (a.formal_charge < 0) {
    if (deg == 1) {
      Element z = m.atom(m.neighbors(i)[0].atom).element;
      if (z == Element::N) return kO5;
      if (z == Element::S) return kO6;
      return kO7;
    }
    return kOS;
  }
  if (deg == 1) {
    int o = m.neighbors(i)[0].atom;
    Element z = m.atom(o).element;
    if (z == Element::C) {
      // acid -OH scored as alcohol (O2); O12 kept in the table for reference
      return kO2;
    }
    if (z == Element::N) return cx.unsaturation(o) == 0 ? kO2 : kO5;
    if (z == Element::S) return kO6;
    return kOS;
  }
  if (deg == 2) {
    return cx.aryl_count[i] > 0 ? kO4 : kO3;
  }
  return kOS;
}

int sulfur(const Context& cx, int i) {
  const Atom& a = cx.mol.atom(i);
  if (a.aromatic) return kS3;
  if (cx.double_count[i] > 0) {
    for (const Neighbor& nb : cx.mol.neighbors(i)) {
      if (cx.mol.bond(nb.bond).order != BondOrder::Double) continue;
      Element z = cx.mol.atom(nb.atom).element;
      if (z == Element::O || z == Element::N) return kS2;
    }
  }
  if (a.formal_charge != 0) return kS2;
  return kS1;
}

int heavy_type(const Context& cx, int i) {
  const Atom& a = cx.mol.atom(i);
  switch (a.element) {
    case Element::C:
      if (a.aromatic) return aromatic_carbon(cx, i);
      if (cx.unsaturation(i) == 0) return saturated_carbon(cx, i);
      return unsaturated_carbon(cx, i);
    case Element::N: return nitrogen(cx, i);
    case Element::O: return oxygen(cx, i);
    case Element::S: return sulfur(cx, i);
    case Element::P: return kP;
    case Element::F: return a.formal_charge < 0 ? kHal : kF;
    case Element::Cl: return a.formal_charge < 0 ? kHal : kCl;
    case Element::Br: return a.formal_charge < 0 ? kHal : kBr;
    case Element::I: return a.formal_charge < 0 ? kHal : kI;
    case Element::B: return kMe1;
  }
  return kCS;
}

// hydrogen class of the hydrogens attached to heavy atom i
int hydrogen_type(const Context& cx, int i) {
  const Molecule& m = cx.mol;
  const Atom& a = m.atom(i);

  // H4: acid / enol H-O-C=[C,N,O,S]; peroxide H-O-[O,S]
  if (a.element == Element::O && !a.aromatic && m.heavy_degree(i) == 1) {
    int o = m.neighbors(i)[0].atom;
    const Atom& pa = m.atom(o);
    if (pa.element == Element::C && !pa.aromatic) {
      for (const Neighbor& nb : m.neighbors(o)) {
        if (m.bond(nb.bond).order != BondOrder::Double) continue;
        Element z = m.atom(nb.atom).element;
        if (z == Element::C || z == Element::N || z == Element::O || z == Element::S)
          return kH4;
      }
    }
    if ((pa.element == Element::O || pa.element == Element::S) && m.heavy_degree(o) == 2)
      return kH4;
  }
  // H3: amine N-H, N-O-H
  if (a.element == Element::N) return kH3;
  if (a.element == Element::O && m.heavy_degree(i) == 1 &&
      m.atom(m.neighbors(i)[0].atom).element == Element::N)
    return kH3;
  // H2: alcohol-like
  if (a.element == Element::S || a.element == Element::P) return kH2;
  if (a.element == Element::O) {
    if (m.heavy_degree(i) == 0) return kH2;  // water
    int o = m.neighbors(i)[0].atom;
    const Atom& pa = m.atom(o);
    if (pa.element == Element::C && (pa.aromatic || cx.unsaturation(o) == 0)) return kH2;
    if (pa.element != Element::C && pa.element != Element::N && pa.element != Element::O &&
        pa.element != Element::S)
      return kH2;
    return kHS;
  }
  // H1: hydrocarbon
  if (a.element == Element::C) return kH1;
  return kHS;
}

}  // namespace

std::vector<double> crippen_atom_contributions(const chem::Molecule& mol) {
  Context cx(mol);
  std::vector<double> contrib(mol.atom_count(), 0.0);
  for (int i = 0; i < mol.atom_count(); ++i) {
    contrib[i] = kValue[heavy_type(cx, i)];
    int h = mol.atom(i).total_h();
    if (h > 0) contrib[i] += h * kValue[hydrogen_type(cx, i)];
  }
  return contrib;
}

double crippen_logp(const chem::Molecule& mol) {
  double sum = 0.0;
  for (double c : crippen_atom_contributions(mol)) sum += c;
  return sum;
}

}  // namespace molsight::desc
