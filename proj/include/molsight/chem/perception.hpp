//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include "molsight/chem/molecule.hpp"

namespace molsight::chem {

/// Marks each SSSR ring of size 5-7 composed of C/N/O/S aromatic iff its
/// pi-electron count satisfies the Hueckel 4n+2 rule. Electron contributions:
///   - atom with an explicit double/triple bond: 1 if the partner is a ring
///     atom, else 0 (exocyclic pi, e.g. =O on a ring atom);
///   - otherwise, if default_valence - degree - H >= 1 the atom can host an
///     in-ring pi bond and contributes 1 (aromatic C, pyridine-type N);
///   - otherwise N/O/S donate a lone pair (2 electrons, pyrrole-type), C-
///     donates 2, C+ contributes 0, and a neutral saturated C blocks the ring.
/// Bonds of aromatic rings get order Aromatic; flags of atoms that no longer
/// qualify are cleared. Idempotent.
Molecule perceive_aromaticity(const Molecule& mol);

/// parse_smiles followed by perceive_aromaticity; the standard ingestion path.
Molecule read_molecule(std::string_view smiles);

namespace detail {
/// Kekulizes atoms flagged aromatic whose pi bond is unassigned: finds a
/// perfect matching on the needy subgraph and rewrites matched bonds to
/// Double, the rest to Single. Throws KekulizationError when no assignment
/// exists. Used by the parser and by sanitize.
void kekulize_flagged(Molecule& mol);
}  // namespace detail

}  // namespace molsight::chem
