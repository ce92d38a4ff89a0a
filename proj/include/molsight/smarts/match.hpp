//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <vector>

#include "molsight/smarts/pattern.hpp"

namespace molsight::smarts {

/// All injective mappings of query atoms onto molecule atoms satisfying atom
/// and bond predicates, deduplicated by matched atom set and ordered
/// lexicographically by the sorted atom indices. Each entry is the sorted
/// matched atom set.
std::vector<std::vector<int>> match_pattern(const Pattern& p, const chem::Molecule& mol);

/// Raw mapping tuples (entry i = molecule atom matched to query atom i).
/// With `unique_sets` (the default used by labels/prevalence), one mapping is
/// kept per matched atom set; ordering is deterministic either way.
std::vector<std::vector<int>> match_mappings(const Pattern& p, const chem::Molecule& mol,
                                             bool unique_sets = true);

bool has_match(const Pattern& p, const chem::Molecule& mol);

}  // namespace molsight::smarts
