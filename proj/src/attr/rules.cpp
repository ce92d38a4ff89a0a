//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <fstream>
#include <sstream>

#include "molsight/attr/rules.hpp"
#include "molsight/chem/perception.hpp"

namespace molsight::attr {

namespace {

TransformationRule make_rule(std::string name, std::string smarts, int edit_atom,
                             chem::Element new_element, int max_degree) {
  TransformationRule r{std::move(name), smarts, smarts::compile_pattern(smarts), edit_atom,
                       new_element, max_degree};
  if (r.edit_atom < 0 || r.edit_atom >= r.pattern.atom_count())
    throw Error("rule edit index out of range: " + r.name);
  return r;
}

}  // namespace

const std::vector<TransformationRule>& default_rules() {
  static const std::vector<TransformationRule> rules = [] {
    std::vector<TransformationRule> r;
    r.push_back(make_rule("ether_to_thioether", "[OX2+0]([#6])[#6]", 0, chem::Element::S, -1));
    r.push_back(make_rule("methyl_to_fluorine", "[CX4H3+0]", 0, chem::Element::F, 1));
    r.push_back(make_rule("chloro_to_bromo", "[ClX1+0]", 0, chem::Element::Br, 1));
    r.push_back(make_rule("bromo_to_chloro", "[BrX1+0]", 0, chem::Element::Cl, 1));
    r.push_back(
        make_rule("amide_to_ester", "[CX3](=[OX1])[NX3+0]", 2, chem::Element::O, 2));
    r.push_back(
        make_rule("ester_to_amide", "[CX3](=[OX1])[OX2+0][#6]", 2, chem::Element::N, 2));
    r.push_back(make_rule("fluorine_to_methyl", "[FX1+0]", 0, chem::Element::C, 1));
    return r;
  }();
  return rules;
}

std::vector<TransformationRule> rules_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open rules file: " + path);
  std::vector<TransformationRule> rules;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string name, smarts, elem;
    int edit = 0, max_degree = -1;
    if (!(ss >> name >> smarts >> edit >> elem))
      throw Error("rule line needs 'name smarts edit_index new_element': " + line);
    ss >> max_degree;
    auto e = chem::element_from_symbol(elem);
    if (!e) throw Error("unknown element in rule: " + elem);
    rules.push_back(make_rule(name, smarts, edit, *e, max_degree));
  }
  return rules;
}

chem::Molecule apply_rule(const chem::Molecule& mol, const TransformationRule& rule,
                          const std::vector<int>& site) {
  if (static_cast<int>(site.size()) != rule.pattern.atom_count())
    throw RuleNotApplicable("site arity does not match pattern for rule " + rule.name);

  // verify the site is a current match
  for (int q = 0; q < rule.pattern.atom_count(); ++q) {
    if (site[q] < 0 || site[q] >= mol.atom_count())
      throw RuleNotApplicable("site atom out of range for rule " + rule.name);
    if (!smarts::eval_atom(rule.pattern.atom(q), mol, site[q]))
      throw RuleNotApplicable("site no longer matches rule " + rule.name);
  }
  for (int b = 0; b < rule.pattern.bond_count(); ++b) {
    const smarts::QueryBond& qb = rule.pattern.bond(b);
    int mb = mol.bond_between(site[qb.a], site[qb.b]);
    if (mb < 0 || !smarts::eval_bond(qb.expr, mol, mb))
      throw RuleNotApplicable("site bonds no longer match rule " + rule.name);
  }

  int target = site[rule.edit_atom];
  if (rule.max_heavy_degree >= 0 && mol.heavy_degree(target) > rule.max_heavy_degree)
    throw RewiringImpossible("substituent count at site exceeds rule arity for " + rule.name);

  chem::Molecule product;
  for (int i = 0; i < mol.atom_count(); ++i) {
    chem::Atom a = mol.atom(i);
    if (i == target) {
      a.element = rule.new_element;
      a.formal_charge = 0;
      a.explicit_h = -1;  // re-resolve
      a.aromatic = false;
    }
    product.add_atom(a);
  }
  for (int i = 0; i < mol.bond_count(); ++i) {
    const chem::Bond& b = mol.bond(i);
    product.add_bond(b.a, b.b, b.order);
  }
  product.finalize(true);  // may throw ValenceError
  return chem::perceive_aromaticity(product);
}

}  // namespace molsight::attr
