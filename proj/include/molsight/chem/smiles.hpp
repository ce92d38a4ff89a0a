//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <string>
#include <string_view>

#include "molsight/chem/molecule.hpp"

namespace molsight::chem {

/// Parses the supported SMILES subset: organic-subset atoms, bracket atoms
/// with charge and H count, ring closures (incl. %nn), branches, bond symbols
/// - = # : / \ and '.'. Stereo markers and isotopes are accepted and
/// discarded. Lowercase aromatic input is kekulized to resolve hydrogen
/// counts; atoms keep their aromatic flags, bond orders are the kekule
/// assignment until perceive_aromaticity is run.
///
/// Throws ParseError (UnclosedRing / UnbalancedParen / UnknownElement /
/// BadSyntax), ValenceError, KekulizationError.
Molecule parse_smiles(std::string_view text);

/// Round-trip serialization: output reparses to a graph isomorphic to mol.
/// Deterministic for a fixed atom ordering. Not canonical across orderings.
std::string write_smiles(const Molecule& mol);

}  // namespace molsight::chem
