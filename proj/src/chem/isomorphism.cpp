//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <algorithm>
#include <vector>

#include "molsight/chem/isomorphism.hpp"

namespace molsight::chem {

namespace {

struct AtomLabel {
  Element element;
  int charge;
  bool aromatic;
  int total_h;
  int degree;

  bool operator==(const AtomLabel&) const = default;
  bool operator<(const AtomLabel& o) const {
    return std::tie(element, charge, aromatic, total_h, degree) <
           std::tie(o.element, o.charge, o.aromatic, o.total_h, o.degree);
  }
};

AtomLabel label_of(const Molecule& m, int i) {
  const Atom& a = m.atom(i);
  return {a.element, a.formal_charge, a.aromatic, a.total_h(), m.heavy_degree(i)};
}

int bond_class(const Molecule& m, int bond) {
  const Bond& b = m.bond(bond);
  if (b.aromatic || b.order == BondOrder::Aromatic) return 4;
  return static_cast<int>(b.order);
}

bool extend(const Molecule& a, const Molecule& b, std::vector<int>& map_ab,
            std::vector<char>& used_b, int next) {
  const int n = a.atom_count();
  if (next == n) return true;
  AtomLabel la = label_of(a, next);
  for (int cand = 0; cand < n; ++cand) {
    if (used_b[cand]) continue;
    if (!(label_of(b, cand) == la)) continue;
    bool ok = true;
    // bonds to already-mapped atoms must exist with equal class, and no extras
    for (const Neighbor& nb : a.neighbors(next)) {
      if (nb.atom >= next) continue;
      int bb = b.bond_between(cand, map_ab[nb.atom]);
      if (bb < 0 || bond_class(b, bb) != bond_class(a, nb.bond)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      for (const Neighbor& nb : b.neighbors(cand)) {
        // reverse direction: mapped b-neighbors must be a-neighbors
        for (int prev = 0; prev < next && ok; ++prev) {
          if (map_ab[prev] == nb.atom && a.bond_between(next, prev) < 0) ok = false;
        }
        if (!ok) break;
      }
    }
    if (!ok) continue;
    map_ab[next] = cand;
    used_b[cand] = 1;
    if (extend(a, b, map_ab, used_b, next + 1)) return true;
    used_b[cand] = 0;
    map_ab[next] = -1;
  }
  return false;
}

}  // namespace

bool graph_isomorphic(const Molecule& a, const Molecule& b) {
  if (a.atom_count() != b.atom_count() || a.bond_count() != b.bond_count()) return false;

  std::vector<AtomLabel> la, lb;
  for (int i = 0; i < a.atom_count(); ++i) la.push_back(label_of(a, i));
  for (int i = 0; i < b.atom_count(); ++i) lb.push_back(label_of(b, i));
  std::vector<AtomLabel> sa = la, sb = lb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (!(sa == sb)) return false;

  std::vector<int> map_ab(a.atom_count(), -1);
  std::vector<char> used_b(b.atom_count(), 0);
  return extend(a, b, map_ab, used_b, 0);
}

}  // namespace molsight::chem
