//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <string>
#include <vector>

#include "molsight/chem/molecule.hpp"
#include "molsight/smarts/match.hpp"

namespace molsight::attr {

/// Element-swap rewrite anchored at one matched query atom. The shipped set
/// covers ether<->thioether, methyl<->fluorine, chloro<->bromo and
/// amide<->ester; a rules file can extend it
/// ("name<TAB>smarts<TAB>edit_index<TAB>new_element[<TAB>max_degree]").
struct TransformationRule {
  std::string name;
  std::string smarts;
  smarts::Pattern pattern;
  int edit_atom = 0;                        // query atom index to rewrite
  chem::Element new_element = chem::Element::C;
  int max_heavy_degree = -1;                // arity constraint; -1 = unconstrained
};

const std::vector<TransformationRule>& default_rules();
std::vector<TransformationRule> rules_from_file(const std::string& path);

/// Applies the rewrite at a current match; hydrogens re-resolved and
/// aromaticity re-perceived. Throws RuleNotApplicable when the site is not a
/// match, RewiringImpossible on arity violations, ValenceError when the
/// product cannot carry the new element.
chem::Molecule apply_rule(const chem::Molecule& mol, const TransformationRule& rule,
                          const std::vector<int>& site);

}  // namespace molsight::attr
