//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "molsight/chem/molecule.hpp"
#include "molsight/common.hpp"

namespace molsight::smarts {

/// Boolean expression over atom primitives. Supported subset: element
/// (symbol / #n), aromatic a / aliphatic A, charge, D<n>, H<n>, X<n>,
/// R / R<n>, '*', with !, & (or juxtaposition), ',' and ';' at standard
/// precedence. Recursive SMARTS and everything else raises
/// UnsupportedPrimitive.
struct AtomExpr {
  enum class Op { Primitive, Not, And, Or };
  enum class Prim {
    Wildcard,
    Element,       // value = element, aromatic constraint in `arom`
    AtomicNumber,  // value = atomic number
    AnyAromatic,
    AnyAliphatic,
    Charge,        // value = formal charge
    Degree,        // value = heavy-atom degree
    TotalH,        // value = total hydrogen count
    Connectivity,  // value = degree + total H
    InRing,        // member of >= 1 SSSR ring
    RingCount,     // value = exact SSSR ring membership count (R0 = acyclic)
  };
  enum class Arom { Either, Aromatic, Aliphatic };

  Op op = Op::Primitive;
  Prim prim = Prim::Wildcard;
  int value = 0;
  Arom arom = Arom::Either;
  std::vector<AtomExpr> children;
};

/// Conjunction of bond primitives: -, =, #, :, ~, @; unspecified bonds match
/// single-or-aromatic.
struct BondExpr {
  enum class Base { Default, Any, Single, Double, Triple, Aromatic };
  Base base = Base::Default;
  bool require_ring = false;
};

struct QueryBond {
  int a = 0;
  int b = 0;
  BondExpr expr;
};

class Pattern {
 public:
  Pattern(std::vector<AtomExpr> atoms, std::vector<QueryBond> bonds, std::string source);

  int atom_count() const { return static_cast<int>(atoms_.size()); }
  int bond_count() const { return static_cast<int>(bonds_.size()); }
  const AtomExpr& atom(int i) const { return atoms_[i]; }
  const QueryBond& bond(int i) const { return bonds_[i]; }
  const std::vector<std::pair<int, int>>& neighbors(int atom) const {
    return adjacency_[atom];  // (other atom, bond index)
  }
  const std::string& source_text() const { return source_; }

 private:
  std::vector<AtomExpr> atoms_;
  std::vector<QueryBond> bonds_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
  std::string source_;
};

/// Compiles a SMARTS-subset string. Throws UnsupportedPrimitive or ParseError.
Pattern compile_pattern(std::string_view text);

/// Primitive evaluation against a molecule atom / bond (used by the matcher
/// and by the brute-force test oracle).
bool eval_atom(const AtomExpr& expr, const chem::Molecule& mol, int atom);
bool eval_bond(const BondExpr& expr, const chem::Molecule& mol, int bond);

}  // namespace molsight::smarts
