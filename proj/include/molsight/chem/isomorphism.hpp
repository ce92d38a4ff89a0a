//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include "molsight/chem/molecule.hpp"

namespace molsight::chem {

/// Whole-graph isomorphism on (element, charge, aromatic flag, total H) atom
/// labels and bond order classes (aromatic-flagged bonds compare as aromatic).
/// Used by round-trip tests and counterfactual identity checks.
bool graph_isomorphic(const Molecule& a, const Molecule& b);

}  // namespace molsight::chem
