//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <string>

#include "molsight/chem/molecule.hpp"

namespace molsight::chem {

struct SanitizeResult {
  enum class Kind { Valid, ValenceExceeded, AromaticityBroken };
  Kind kind = Kind::Valid;
  int atom = -1;   // offending atom for ValenceExceeded
  std::string message;

  bool ok() const { return kind == Kind::Valid; }
};

/// Structural validity check: element valences within the supported model,
/// charge states with a defined valence model, aromatic flags consistent
/// (every aromatic bond joins two aromatic atoms, aromatic subgraph
/// kekulizable). Pure; never throws.
SanitizeResult sanitize(const Molecule& mol);

}  // namespace molsight::chem
