//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <algorithm>
#include <set>

#include "molsight/smarts/match.hpp"

namespace molsight::smarts {

namespace {

// Static query order: start at the atom with the most query bonds, then BFS
// so every atom after the first has a mapped neighbor.
std::vector<int> query_order(const Pattern& p) {
  const int n = p.atom_count();
  int start = 0;
  for (int i = 1; i < n; ++i)
    if (p.neighbors(i).size() > p.neighbors(start).size()) start = i;

  std::vector<int> order;
  std::vector<char> placed(n, 0);
  order.push_back(start);
  placed[start] = 1;
  for (size_t head = 0; head < order.size(); ++head) {
    for (auto [o, b] : p.neighbors(order[head])) {
      if (!placed[o]) {
        placed[o] = 1;
        order.push_back(o);
      }
    }
  }
  return order;
}

struct Search {
  const Pattern& p;
  const chem::Molecule& mol;
  std::vector<int> order;          // query atoms in assignment order
  std::vector<int> map;            // query atom -> mol atom
  std::vector<char> used;          // mol atom used
  std::vector<std::vector<int>> out;
  bool stop_at_first = false;
  bool found = false;

  Search(const Pattern& pp, const chem::Molecule& mm)
      : p(pp), mol(mm), order(query_order(pp)), map(pp.atom_count(), -1),
        used(mm.atom_count(), 0) {}

  bool bonds_ok(int q, int cand) const {
    for (auto [oq, bq] : p.neighbors(q)) {
      if (map[oq] < 0) continue;
      int mb = mol.bond_between(cand, map[oq]);
      if (mb < 0) return false;
      if (!eval_bond(p.bond(bq).expr, mol, mb)) return false;
    }
    return true;
  }

  void recurse(size_t depth) {
    if (found && stop_at_first) return;
    if (depth == order.size()) {
      out.push_back(map);
      found = true;
      return;
    }
    int q = order[depth];
    if (depth == 0) {
      for (int cand = 0; cand < mol.atom_count(); ++cand) {
        if (!eval_atom(p.atom(q), mol, cand)) continue;
        map[q] = cand;
        used[cand] = 1;
        recurse(depth + 1);
        used[cand] = 0;
        map[q] = -1;
        if (found && stop_at_first) return;
      }
      return;
    }
    // candidates: molecule neighbors of some already-mapped query neighbor
    int anchor = -1;
    for (auto [oq, bq] : p.neighbors(q)) {
      if (map[oq] >= 0) {
        anchor = map[oq];
        break;
      }
    }
    for (const chem::Neighbor& nb : mol.neighbors(anchor)) {
      int cand = nb.atom;
      if (used[cand]) continue;
      if (!eval_atom(p.atom(q), mol, cand)) continue;
      if (!bonds_ok(q, cand)) continue;
      map[q] = cand;
      used[cand] = 1;
      recurse(depth + 1);
      used[cand] = 0;
      map[q] = -1;
      if (found && stop_at_first) return;
    }
  }
};

}  // namespace

std::vector<std::vector<int>> match_mappings(const Pattern& p, const chem::Molecule& mol,
                                             bool unique_sets) {
  Search s(p, mol);
  s.recurse(0);

  std::vector<std::pair<std::vector<int>, std::vector<int>>> keyed;  // (sorted set, mapping)
  keyed.reserve(s.out.size());
  for (auto& m : s.out) {
    std::vector<int> key = m;
    std::sort(key.begin(), key.end());
    keyed.push_back({std::move(key), std::move(m)});
  }
  std::sort(keyed.begin(), keyed.end());

  std::vector<std::vector<int>> result;
  const std::vector<int>* prev_key = nullptr;
  for (auto& [key, mapping] : keyed) {
    if (unique_sets && prev_key && *prev_key == key) continue;
    result.push_back(mapping);
    prev_key = &key;
  }
  return result;
}

std::vector<std::vector<int>> match_pattern(const Pattern& p, const chem::Molecule& mol) {
  std::vector<std::vector<int>> sets;
  for (auto& m : match_mappings(p, mol, true)) {
    std::sort(m.begin(), m.end());
    sets.push_back(std::move(m));
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

bool has_match(const Pattern& p, const chem::Molecule& mol) {
  Search s(p, mol);
  s.stop_at_first = true;
  s.recurse(0);
  return s.found;
}

}  // namespace molsight::smarts
