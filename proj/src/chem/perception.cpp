//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <algorithm>
#include <set>
#include <vector>

#include "molsight/chem/perception.hpp"
#include "molsight/chem/smiles.hpp"

namespace molsight::chem {

namespace detail {

void kekulize_flagged(Molecule& mol) {
  const int n = mol.atom_count();
  const int m = mol.bond_count();

  std::vector<int> degree(n, 0);
  std::vector<int> multiple(n, 0);  // valence beyond sigma from explicit =/# bonds
  for (int i = 0; i < m; ++i) {
    const Bond& b = mol.bond(i);
    ++degree[b.a];
    ++degree[b.b];
    if (b.order == BondOrder::Double) {
      ++multiple[b.a];
      ++multiple[b.b];
    } else if (b.order == BondOrder::Triple) {
      multiple[b.a] += 2;
      multiple[b.b] += 2;
    }
  }

  // An aromatic-flagged atom is "needy" when it still must host one pi bond.
  std::vector<char> needy(n, 0);
  bool any = false;
  for (int i = 0; i < n; ++i) {
    const Atom& a = mol.atom(i);
    if (!a.aromatic || multiple[i] > 0) continue;
    ValenceList v = default_valences(a.element, a.formal_charge);
    if (v.empty()) continue;
    int eh = a.explicit_h >= 0 ? a.explicit_h : 0;
    if (*v.begin() - degree[i] - eh >= 1) {
      needy[i] = 1;
      any = true;
    }
  }

  // Candidate edges: aromatic-order bonds joining two needy atoms.
  std::vector<std::vector<std::pair<int, int>>> cand(n);  // atom -> (other, bond)
  for (int i = 0; i < m; ++i) {
    const Bond& b = mol.bond(i);
    if (b.order != BondOrder::Aromatic) continue;
    if (needy[b.a] && needy[b.b]) {
      cand[b.a].push_back({b.b, i});
      cand[b.b].push_back({b.a, i});
    }
  }
  for (auto& c : cand) std::sort(c.begin(), c.end());

  std::vector<int> mate(n, -1);
  if (any) {
    // deterministic backtracking perfect matching over needy atoms
    std::vector<int> order;
    for (int i = 0; i < n; ++i)
      if (needy[i]) order.push_back(i);

    auto solve = [&](auto&& self, size_t idx) -> bool {
      while (idx < order.size() && mate[order[idx]] >= 0) ++idx;
      if (idx == order.size()) return true;
      int a = order[idx];
      for (const auto& [b, bond] : cand[a]) {
        if (mate[b] >= 0) continue;
        mate[a] = b;
        mate[b] = a;
        if (self(self, idx + 1)) return true;
        mate[a] = -1;
        mate[b] = -1;
      }
      return false;
    };
    if (!solve(solve, 0))
      throw KekulizationError("aromatic input admits no valid alternating bond assignment");
  }

  for (int i = 0; i < m; ++i) {
    Bond& b = mol.bond_mut(i);
    if (b.order != BondOrder::Aromatic) continue;
    b.order = (mate[b.a] == b.b) ? BondOrder::Double : BondOrder::Single;
  }
}

}  // namespace detail

namespace {

constexpr int kBlocked = -1;

bool hueckel_element(Element e) {
  return e == Element::C || e == Element::N || e == Element::O || e == Element::S;
}

// Pi-electron contribution of `atom` to ring `ring_set`; kBlocked disqualifies.
int pi_contribution(const Molecule& mol, int atom, const std::vector<char>& ring_set) {
  const Atom& a = mol.atom(atom);
  bool exo_to_ring_atom = false;
  bool exo_other = false;
  for (const Neighbor& nb : mol.neighbors(atom)) {
    BondOrder o = mol.bond(nb.bond).order;
    if (o != BondOrder::Double && o != BondOrder::Triple) continue;
    if (ring_set[nb.atom]) return 1;  // in-ring pi bond
    if (mol.atom_in_ring(nb.atom))
      exo_to_ring_atom = true;  // fused-ring kekule alternative
    else
      exo_other = true;
  }
  if (exo_to_ring_atom) return 1;
  if (exo_other) return 0;  // exocyclic pi, e.g. =O on a ring atom

  ValenceList v = default_valences(a.element, a.formal_charge);
  if (v.empty()) return kBlocked;
  int avail = *v.begin() - mol.heavy_degree(atom) - a.total_h();
  if (avail >= 1) return 1;
  if (a.element == Element::N || a.element == Element::O || a.element == Element::S) return 2;
  if (a.element == Element::C && a.formal_charge < 0) return 2;
  if (a.element == Element::C && a.formal_charge > 0) return 0;
  return kBlocked;
}

}  // namespace

Molecule perceive_aromaticity(const Molecule& mol) {
  Molecule out = mol;
  for (int i = 0; i < out.atom_count(); ++i) out.atom_mut(i).aromatic = false;
  for (int i = 0; i < out.bond_count(); ++i) out.bond_mut(i).aromatic = false;

  std::vector<char> aromatic_atom(out.atom_count(), 0);
  std::set<int> aromatic_bonds;

  for (const auto& ring : mol.rings()) {
    if (ring.size() < 5 || ring.size() > 7) continue;
    bool eligible = true;
    for (int a : ring) {
      if (!hueckel_element(mol.atom(a).element)) {
        eligible = false;
        break;
      }
    }
    if (!eligible) continue;

    std::vector<char> ring_set(mol.atom_count(), 0);
    for (int a : ring) ring_set[a] = 1;

    int total = 0;
    bool blocked = false;
    for (int a : ring) {
      int c = pi_contribution(mol, a, ring_set);
      if (c == kBlocked) {
        blocked = true;
        break;
      }
      total += c;
    }
    if (blocked || total % 4 != 2) continue;

    for (size_t i = 0; i < ring.size(); ++i) {
      aromatic_atom[ring[i]] = 1;
      int b = mol.bond_between(ring[i], ring[(i + 1) % ring.size()]);
      if (b >= 0) aromatic_bonds.insert(b);
    }
  }

  for (int i = 0; i < out.atom_count(); ++i)
    out.atom_mut(i).aromatic = aromatic_atom[i] != 0;
  for (int b : aromatic_bonds) {
    out.bond_mut(b).order = BondOrder::Aromatic;
    out.bond_mut(b).aromatic = true;
  }
  return out;
}

Molecule read_molecule(std::string_view smiles) {
  return perceive_aromaticity(parse_smiles(smiles));
}

}  // namespace molsight::chem
