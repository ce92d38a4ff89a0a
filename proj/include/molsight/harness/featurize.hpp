//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <Eigen/Core>

#include "molsight/chem/molecule.hpp"

namespace molsight::harness {

/// Fixed continuous per-atom feature layout (width constant across
/// molecules):
///   [0..9]  element one-hot (B, C, N, O, P, S, F, Cl, Br, I)
///   [10]    formal charge
///   [11]    aromatic flag
///   [12]    heavy-atom degree
///   [13]    total hydrogen count
///   [14]    in-ring flag
///   [15]    Wildman-Crippen atom contribution (incl. attached H)
///   [16]    Ertl TPSA atom contribution
///   [17]    atom mass incl. attached H, scaled by 1/100
inline constexpr int kAtomFeatureWidth = 18;

/// Requires aromaticity-perceived input; deterministic.
Eigen::MatrixXd featurize_atoms(const chem::Molecule& mol);

}  // namespace molsight::harness
