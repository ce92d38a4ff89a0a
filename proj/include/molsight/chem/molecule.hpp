//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "molsight/chem/element.hpp"
#include "molsight/common.hpp"

namespace molsight::chem {

enum class BondOrder : std::uint8_t { Single = 1, Double = 2, Triple = 3, Aromatic = 4 };

struct Atom {
  Element element = Element::C;
  std::int8_t formal_charge = 0;
  std::int8_t explicit_h = -1;  // bracket H count; -1 = unspecified
  std::uint8_t implicit_h = 0;  // resolved during finalization
  bool aromatic = false;

  int total_h() const { return explicit_h >= 0 ? explicit_h : implicit_h; }
};

struct Bond {
  int a = 0;
  int b = 0;
  BondOrder order = BondOrder::Single;
  bool aromatic = false;  // set by aromaticity perception

  int other(int atom) const { return atom == a ? b : a; }
};

struct Neighbor {
  int atom;
  int bond;
};

/// Attributed molecular graph. Immutable once finalized; all chem operations
/// treat Molecule as a value type.
class Molecule {
 public:
  Molecule() = default;

  int add_atom(const Atom& atom);
  /// Throws Error on self-bonds or duplicate atom pairs.
  void add_bond(int a, int b, BondOrder order);

  /// Recomputes adjacency, implicit hydrogens, fragments and the ring cache.
  /// `check_valence` throws ValenceError when explicit bonds exceed the
  /// element's maximum valence.
  void finalize(bool check_valence = true);

  int atom_count() const { return static_cast<int>(atoms_.size()); }
  int bond_count() const { return static_cast<int>(bonds_.size()); }
  const Atom& atom(int i) const { return atoms_[i]; }
  Atom& atom_mut(int i) { return atoms_[i]; }
  const Bond& bond(int i) const { return bonds_[i]; }
  Bond& bond_mut(int i) { return bonds_[i]; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Bond>& bonds() const { return bonds_; }

  const std::vector<Neighbor>& neighbors(int atom) const { return adjacency_[atom]; }
  int heavy_degree(int atom) const { return static_cast<int>(adjacency_[atom].size()); }
  /// Index of the bond joining a and b, or -1.
  int bond_between(int a, int b) const;

  /// Sum of bond orders at `atom` where aromatic bonds count 1.5.
  double bond_order_sum(int atom) const;

  /// Cached smallest set of smallest rings; atom-index cycles in ring order.
  const std::vector<std::vector<int>>& rings() const { return rings_; }
  /// Number of SSSR rings containing the atom / the bond.
  int ring_count_of_atom(int atom) const { return atom_ring_count_[atom]; }
  bool bond_in_ring(int bond) const { return bond_ring_count_[bond] > 0; }
  bool atom_in_ring(int atom) const { return atom_ring_count_[atom] > 0; }

  int fragment_count() const { return fragment_count_; }
  bool multi_fragment() const { return fragment_count_ > 1; }

  const std::string& source_text() const { return source_text_; }
  void set_source_text(std::string s) { source_text_ = std::move(s); }

 private:
  friend std::vector<std::vector<int>> sssr(const Molecule& mol);

  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<std::vector<int>> rings_;
  std::vector<int> atom_ring_count_;
  std::vector<int> bond_ring_count_;
  int fragment_count_ = 0;
  std::string source_text_;

  void resolve_hydrogens(bool check_valence);
};

/// Smallest set of smallest rings (fresh computation; Molecule::rings() is
/// the finalize-time cache of the same result). Returns exactly
/// bonds - atoms + components cycles, deterministically.
std::vector<std::vector<int>> sssr(const Molecule& mol);

/// Partition of `atom_subset` into maximal sets connected through bonds whose
/// endpoints both lie in the subset. Components are sorted by smallest member.
std::vector<std::vector<int>> connected_components(const Molecule& mol,
                                                   const std::vector<int>& atom_subset);

}  // namespace molsight::chem
