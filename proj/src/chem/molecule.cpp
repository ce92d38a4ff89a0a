//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include "molsight/chem/molecule.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <set>

namespace molsight::chem {

int Molecule::add_atom(const Atom& atom) {
  atoms_.push_back(atom);
  return static_cast<int>(atoms_.size()) - 1;
}

void Molecule::add_bond(int a, int b, BondOrder order) {
  if (a == b) throw Error("bond endpoints must be distinct");
  if (a < 0 || b < 0 || a >= atom_count() || b >= atom_count())
    throw IndexOutOfRange("bond endpoint out of range");
  for (const Bond& bond : bonds_) {
    if ((bond.a == a && bond.b == b) || (bond.a == b && bond.b == a))
      throw Error("duplicate bond between atoms");
  }
  bonds_.push_back(Bond{a, b, order, false});
}

int Molecule::bond_between(int a, int b) const {
  for (const Neighbor& n : adjacency_[a]) {
    if (n.atom == b) return n.bond;
  }
  return -1;
}

double Molecule::bond_order_sum(int atom) const {
  double sum = 0.0;
  for (const Neighbor& n : adjacency_[atom]) {
    switch (bonds_[n.bond].order) {
      case BondOrder::Single: sum += 1.0; break;
      case BondOrder::Double: sum += 2.0; break;
      case BondOrder::Triple: sum += 3.0; break;
      case BondOrder::Aromatic: sum += 1.5; break;
    }
  }
  return sum;
}

void Molecule::finalize(bool check_valence) {
  adjacency_.assign(atoms_.size(), {});
  for (int i = 0; i < bond_count(); ++i) {
    adjacency_[bonds_[i].a].push_back(Neighbor{bonds_[i].b, i});
    adjacency_[bonds_[i].b].push_back(Neighbor{bonds_[i].a, i});
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end(),
              [](const Neighbor& x, const Neighbor& y) { return x.atom < y.atom; });
  }

  // fragments
  fragment_count_ = 0;
  std::vector<char> seen(atoms_.size(), 0);
  for (int start = 0; start < atom_count(); ++start) {
    if (seen[start]) continue;
    ++fragment_count_;
    std::deque<int> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const Neighbor& n : adjacency_[v]) {
        if (!seen[n.atom]) {
          seen[n.atom] = 1;
          queue.push_back(n.atom);
        }
      }
    }
  }

  resolve_hydrogens(check_valence);

  rings_ = sssr(*this);
  atom_ring_count_.assign(atoms_.size(), 0);
  bond_ring_count_.assign(bonds_.size(), 0);
  for (const auto& ring : rings_) {
    for (size_t i = 0; i < ring.size(); ++i) {
      ++atom_ring_count_[ring[i]];
      int b = bond_between(ring[i], ring[(i + 1) % ring.size()]);
      if (b >= 0) ++bond_ring_count_[b];
    }
  }
}

void Molecule::resolve_hydrogens(bool check_valence) {
  for (int i = 0; i < atom_count(); ++i) {
    Atom& atom = atoms_[i];
    int sigma = heavy_degree(i);
    int extra = 0;
    bool has_multiple = false;
    bool has_aromatic_bond = false;
    for (const Neighbor& n : adjacency_[i]) {
      switch (bonds_[n.bond].order) {
        case BondOrder::Double: extra += 1; has_multiple = true; break;
        case BondOrder::Triple: extra += 2; has_multiple = true; break;
        case BondOrder::Aromatic: has_aromatic_bond = true; break;
        case BondOrder::Single: break;
      }
    }
    ValenceList valences = default_valences(atom.element, atom.formal_charge);
    if (valences.empty()) {
      if (check_valence)
        throw ValenceError(i, "no valence model for charge state of atom " + std::to_string(i));
      atom.implicit_h = 0;
      continue;
    }
    int eh = atom.explicit_h >= 0 ? atom.explicit_h : 0;
    int pi = 0;
    if (has_aromatic_bond && !has_multiple &&
        valences.max() - sigma - eh >= 1) {
      pi = 1;  // one delocalized bond of the aromatic system
    }
    int used = sigma + extra + pi;
    if (atom.explicit_h >= 0) {
      atom.implicit_h = 0;
      if (check_valence && used + atom.explicit_h > valences.max())
        throw ValenceError(i, "explicit bonds exceed maximum valence at atom " +
                                  std::to_string(i));
    } else {
      int chosen = -1;
      for (int v : valences) {
        if (v >= used) {
          chosen = v;
          break;
        }
      }
      if (chosen < 0) {
        if (check_valence)
          throw ValenceError(i, "explicit bonds exceed maximum valence at atom " +
                                    std::to_string(i));
        atom.implicit_h = 0;
      } else {
        atom.implicit_h = static_cast<std::uint8_t>(chosen - used);
      }
    }
  }
}

namespace {

// Edge-incidence bitset over bonds, for GF(2) independence.
struct EdgeSet {
  std::vector<std::uint64_t> words;
  explicit EdgeSet(int nbits) : words((nbits + 63) / 64, 0) {}
  void set(int i) { words[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  bool any() const {
    for (auto w : words)
      if (w) return true;
    return false;
  }
  int top_bit() const {
    for (int w = static_cast<int>(words.size()) - 1; w >= 0; --w) {
      if (words[w]) return w * 64 + 63 - std::countl_zero(words[w]);
    }
    return -1;
  }
  void operator^=(const EdgeSet& o) {
    for (size_t i = 0; i < words.size(); ++i) words[i] ^= o.words[i];
  }
};

}  // namespace

std::vector<std::vector<int>> sssr(const Molecule& mol) {
  const int n = mol.atom_count();
  const int m = mol.bond_count();
  int target = m - n + mol.fragment_count();
  if (target <= 0) return {};

  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  // BFS trees from every vertex, deterministic parents (ascending neighbors).
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, kInf));
  std::vector<std::vector<int>> parent(n, std::vector<int>(n, -1));
  for (int src = 0; src < n; ++src) {
    dist[src][src] = 0;
    std::deque<int> queue{src};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const Neighbor& nb : mol.neighbors(v)) {
        if (dist[src][nb.atom] == kInf) {
          dist[src][nb.atom] = dist[src][v] + 1;
          parent[src][nb.atom] = v;
          queue.push_back(nb.atom);
        }
      }
    }
  }

  auto path_from = [&](int src, int v) {
    std::vector<int> path;  // v .. src inclusive
    while (v != -1) {
      path.push_back(v);
      v = parent[src][v];
    }
    return path;
  };

  // Horton candidate cycles: for each vertex x and edge (u,v), the cycle
  // sp(x,u) + (u,v) + sp(v,x) when the two paths share only x.
  struct Candidate {
    std::vector<int> cycle;        // ring order
    std::vector<int> sorted_atoms; // dedup & ordering key
    std::vector<int> bond_ids;
  };
  std::vector<Candidate> candidates;
  std::set<std::vector<int>> seen_atom_sets;

  for (int x = 0; x < n; ++x) {
    for (int e = 0; e < m; ++e) {
      const Bond& bond = mol.bond(e);
      int u = bond.a, v = bond.b;
      if (dist[x][u] >= kInf || dist[x][v] >= kInf) continue;
      std::vector<int> pu = path_from(x, u);
      std::vector<int> pv = path_from(x, v);
      if (pu.size() < 2 && pv.size() < 2) continue;  // edge at x itself
      // disjointness except x
      std::vector<char> in_pu(n, 0);
      for (int a : pu) in_pu[a] = 1;
      bool ok = true;
      for (size_t i = 0; i + 1 < pv.size(); ++i) {
        if (in_pu[pv[i]]) { ok = false; break; }
      }
      if (!ok) continue;
      // cycle = u..x followed by x..v reversed (drop duplicated x)
      std::vector<int> cycle = pu;
      for (int i = static_cast<int>(pv.size()) - 2; i >= 0; --i)
        cycle.push_back(pv[i]);
      if (cycle.size() < 3) continue;

      std::vector<int> sorted_atoms = cycle;
      std::sort(sorted_atoms.begin(), sorted_atoms.end());
      if (std::adjacent_find(sorted_atoms.begin(), sorted_atoms.end()) != sorted_atoms.end())
        continue;  // not simple
      if (!seen_atom_sets.insert(sorted_atoms).second) continue;

      std::vector<int> bond_ids;
      bool edges_ok = true;
      for (size_t i = 0; i < cycle.size(); ++i) {
        int b = mol.bond_between(cycle[i], cycle[(i + 1) % cycle.size()]);
        if (b < 0) { edges_ok = false; break; }
        bond_ids.push_back(b);
      }
      if (!edges_ok) continue;
      candidates.push_back(Candidate{std::move(cycle), std::move(sorted_atoms),
                                     std::move(bond_ids)});
    }
  }

  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.cycle.size() != b.cycle.size()) return a.cycle.size() < b.cycle.size();
    return a.sorted_atoms < b.sorted_atoms;
  });

  // Greedy GF(2)-independent selection.
  std::vector<EdgeSet> pivots;       // reduced rows
  std::vector<int> pivot_bits;
  std::vector<std::vector<int>> result;
  for (const Candidate& cand : candidates) {
    if (static_cast<int>(result.size()) == target) break;
    EdgeSet row(m);
    for (int b : cand.bond_ids) row.set(b);
    bool independent = true;
    while (true) {
      int bit = row.top_bit();
      if (bit < 0) { independent = false; break; }
      bool reduced = false;
      for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivot_bits[i] == bit) {
          row ^= pivots[i];
          reduced = true;
          break;
        }
      }
      if (!reduced) break;
    }
    if (!independent) continue;
    pivot_bits.push_back(row.top_bit());
    pivots.push_back(row);

    // canonical orientation: start at smallest atom, step toward smaller neighbor
    const std::vector<int>& cyc = cand.cycle;
    int k = static_cast<int>(cyc.size());
    int start = 0;
    for (int i = 1; i < k; ++i)
      if (cyc[i] < cyc[start]) start = i;
    int next = cyc[(start + 1) % k];
    int prev = cyc[(start + k - 1) % k];
    std::vector<int> oriented;
    oriented.reserve(k);
    if (next <= prev) {
      for (int i = 0; i < k; ++i) oriented.push_back(cyc[(start + i) % k]);
    } else {
      for (int i = 0; i < k; ++i) oriented.push_back(cyc[(start + k - i) % k]);
    }
    result.push_back(std::move(oriented));
  }

  return result;
}

std::vector<std::vector<int>> connected_components(const Molecule& mol,
                                                   const std::vector<int>& atom_subset) {
  std::vector<char> in_subset(mol.atom_count(), 0);
  for (int a : atom_subset) {
    if (a < 0 || a >= mol.atom_count())
      throw IndexOutOfRange("atom index " + std::to_string(a) + " out of range");
    in_subset[a] = 1;
  }
  std::vector<int> members = atom_subset;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  std::vector<char> seen(mol.atom_count(), 0);
  std::vector<std::vector<int>> components;
  for (int start : members) {
    if (seen[start]) continue;
    std::vector<int> comp;
    std::deque<int> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (const Neighbor& n : mol.neighbors(v)) {
        if (in_subset[n.atom] && !seen[n.atom]) {
          seen[n.atom] = 1;
          queue.push_back(n.atom);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

}  // namespace molsight::chem
