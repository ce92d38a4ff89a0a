//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "molsight/chem/smiles.hpp"

namespace molsight::chem {

namespace {

class Writer {
 public:
  explicit Writer(const Molecule& mol) : mol_(mol) {}

  std::string run() {
    const int n = mol_.atom_count();
    visited_.assign(n, 0);
    bond_used_.assign(mol_.bond_count(), 0);
    ring_digit_.assign(mol_.bond_count(), -1);
    for (int d = 1; d < 100; ++d) free_digits_.insert(d);

    std::string out;
    bool first = true;
    for (int start = 0; start < n; ++start) {
      if (visited_[start]) continue;
      if (!first) out += '.';
      first = false;
      mark_tree(start);
      emit_atom(start, -1, out);
    }
    return out;
  }

 private:
  const Molecule& mol_;
  std::vector<char> visited_;
  std::vector<char> bond_used_;   // tree bonds during mark phase
  std::vector<int> ring_digit_;   // assigned closure digit per back-edge bond
  std::set<int> free_digits_;
  std::vector<char> emitted_;

  // First DFS: classify tree vs ring-closure bonds.
  void mark_tree(int start) {
    std::vector<int> stack{start};
    visited_[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : mol_.neighbors(v)) {
        if (!visited_[nb.atom]) {
          visited_[nb.atom] = 1;
          bond_used_[nb.bond] = 1;  // tree bond
          stack.push_back(nb.atom);
        }
      }
    }
  }

  static char bond_char(const Molecule& mol, const Bond& b) {
    switch (b.order) {
      case BondOrder::Double: return '=';
      case BondOrder::Triple: return '#';
      case BondOrder::Aromatic: return 0;
      case BondOrder::Single:
        // avoid the aromatic-implied default between two lowercase atoms
        if (mol.atom(b.a).aromatic && mol.atom(b.b).aromatic) return '-';
        return 0;
    }
    return 0;
  }

  // Simulate the hydrogen count a bare (no-bracket) atom would reparse with.
  int bare_reparse_h(int idx) const {
    const Atom& a = mol_.atom(idx);
    int sigma = mol_.heavy_degree(idx);
    int extra = 0;
    bool has_multiple = false;
    bool has_aromatic_order = false;
    for (const Neighbor& nb : mol_.neighbors(idx)) {
      switch (mol_.bond(nb.bond).order) {
        case BondOrder::Double: extra += 1; has_multiple = true; break;
        case BondOrder::Triple: extra += 2; has_multiple = true; break;
        case BondOrder::Aromatic: has_aromatic_order = true; break;
        case BondOrder::Single: break;
      }
    }
    ValenceList v = default_valences(a.element, 0);
    if (v.empty()) return -1;
    int pi = 0;
    if ((a.aromatic || has_aromatic_order) && !has_multiple && *v.begin() - sigma >= 1) pi = 1;
    int used = sigma + extra + pi;
    for (int val : v) {
      if (val >= used) return val - used;
    }
    return -1;
  }

  std::string atom_token(int idx) const {
    const Atom& a = mol_.atom(idx);
    std::string sym(symbol(a.element));
    if (a.aromatic)
      std::transform(sym.begin(), sym.end(), sym.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

    bool bare_ok = a.formal_charge == 0 && bare_reparse_h(idx) == a.total_h();
    if (bare_ok) return sym;

    std::string token = "[" + sym;
    int h = a.total_h();
    if (h > 0) {
      token += 'H';
      if (h > 1) token += std::to_string(h);
    }
    if (a.formal_charge != 0) {
      token += a.formal_charge > 0 ? '+' : '-';
      int mag = a.formal_charge > 0 ? a.formal_charge : -a.formal_charge;
      if (mag > 1) token += std::to_string(mag);
    }
    token += ']';
    return token;
  }

  void emit_atom(int v, int from_bond, std::string& out) {
    if (from_bond >= 0) {
      char bc = bond_char(mol_, mol_.bond(from_bond));
      if (bc) out += bc;
    }
    out += atom_token(v);

    // ring closures at this atom, ascending neighbor order
    for (const Neighbor& nb : mol_.neighbors(v)) {
      if (bond_used_[nb.bond]) continue;  // tree bond
      if (ring_digit_[nb.bond] < 0) {
        int d = *free_digits_.begin();
        free_digits_.erase(free_digits_.begin());
        ring_digit_[nb.bond] = d;
        char bc = bond_char(mol_, mol_.bond(nb.bond));
        if (bc) out += bc;
        out += digit_text(d);
      } else {
        int d = ring_digit_[nb.bond];
        out += digit_text(d);
        free_digits_.insert(d);
      }
    }

    // tree children, ascending atom order; all but the last in parentheses
    std::vector<Neighbor> children;
    for (const Neighbor& nb : mol_.neighbors(v)) {
      if (bond_used_[nb.bond] && !child_emitted(nb.bond)) children.push_back(nb);
    }
    // a tree bond is traversed exactly once; mark now
    for (size_t i = 0; i < children.size(); ++i) {
      mark_child(children[i].bond);
      bool last = (i + 1 == children.size());
      if (!last) out += '(';
      emit_atom(children[i].atom, children[i].bond, out);
      if (!last) out += ')';
    }
  }

  std::vector<char> child_done_ = {};
  bool child_emitted(int bond) {
    if (child_done_.empty()) child_done_.assign(mol_.bond_count(), 0);
    return child_done_[bond] != 0;
  }
  void mark_child(int bond) {
    if (child_done_.empty()) child_done_.assign(mol_.bond_count(), 0);
    child_done_[bond] = 1;
  }

  static std::string digit_text(int d) {
    if (d < 10) return std::string(1, static_cast<char>('0' + d));
    return "%" + std::to_string(d);
  }
};

}  // namespace

std::string write_smiles(const Molecule& mol) {
  if (mol.atom_count() == 0) return "";
  return Writer(mol).run();
}

}  // namespace molsight::chem
