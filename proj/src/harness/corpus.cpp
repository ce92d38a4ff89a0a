//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <vector>

#include "molsight/chem/perception.hpp"
#include "molsight/chem/sanitize.hpp"
#include "molsight/chem/smiles.hpp"
#include "molsight/harness/corpus.hpp"
#include "molsight/num/rng.hpp"

namespace molsight::harness {

namespace {

// Scaffolds are parsed without perception so substituents graft onto the
// kekule form; perception runs on the finished molecule.
const std::vector<const char*>& scaffolds() {
  static const std::vector<const char*> s = {
      "c1ccccc1",        // benzene
      "c1ccncc1",        // pyridine
      "c1ccsc1",         // thiophene
      "c1cc[nH]c1",      // pyrrole
      "c1ccoc1",         // furan
      "c1cnc[nH]1",      // imidazole
      "c1ccc2ccccc2c1",  // naphthalene
      "C1CCCCC1",        // cyclohexane
      "C1CCCC1",         // cyclopentane
      "C1CC1",           // cyclopropane
      "C1CCNCC1",        // piperidine
      "C1CCOC1",         // tetrahydrofuran
      "C1CNCCN1",        // piperazine
      "CCCC",
      "CCCCCC",
      "CC(C)C",
      "CCOCC",
  };
  return s;
}

struct Fragment {
  const char* smiles;
  double weight;
};

// Attachment is always through fragment atom 0 by a single bond.
const std::vector<Fragment>& substituents() {
  static const std::vector<Fragment> f = {
      {"C", 10},          {"CC", 6},         {"C(C)C", 3},    {"F", 7},
      {"Cl", 6},          {"Br", 4},         {"O", 7},        {"OC", 6},
      {"N", 5},           {"NC", 3},         {"N(C)C", 4},    {"C#N", 6},
      {"[N+](=O)[O-]", 2},{"C(=O)O", 4},     {"C(=O)OC", 4},  {"C(=O)N", 4},
      {"C(=O)NC", 3},     {"C(=O)C", 4},     {"S", 2},        {"SC", 3},
      {"S(=O)(=O)N", 2},  {"S(=O)(=O)C", 2}, {"C=C", 3},      {"C#C", 2},
      {"C(F)(F)F", 3},    {"CO", 4},         {"CN", 3},       {"[NH3+]", 1.2},
      {"C(=O)[O-]", 1.2}, {"CCO", 3},        {"OCC", 2},      {"I", 0.8},
      {"B(O)O", 0.6},     {"CC=C", 2},       {"CCC", 3},      {"OC(C)C", 2},
  };
  return f;
}

int pick_weighted(num::Rng& rng, const std::vector<Fragment>& frags) {
  double total = 0;
  for (const Fragment& f : frags) total += f.weight;
  double x = rng.next_double() * total;
  for (size_t i = 0; i < frags.size(); ++i) {
    x -= frags[i].weight;
    if (x <= 0) return static_cast<int>(i);
  }
  return static_cast<int>(frags.size()) - 1;
}

// graft fragment via single bond from `anchor`; returns false when the anchor
// has no hydrogen to give
bool graft(chem::Molecule& mol, int anchor, const chem::Molecule& frag) {
  if (mol.atom(anchor).total_h() < 1) return false;
  int offset = mol.atom_count();
  for (int i = 0; i < frag.atom_count(); ++i) mol.add_atom(frag.atom(i));
  for (int i = 0; i < frag.bond_count(); ++i) {
    const chem::Bond& b = frag.bond(i);
    mol.add_bond(b.a + offset, b.b + offset, b.order);
  }
  mol.add_bond(anchor, offset, chem::BondOrder::Single);
  return true;
}

}  // namespace

std::vector<std::string> generate_corpus_smiles(const CorpusConfig& config) {
  num::Rng rng(config.seed);

  std::vector<chem::Molecule> scaffold_mols;
  for (const char* s : scaffolds()) scaffold_mols.push_back(chem::parse_smiles(s));
  std::vector<chem::Molecule> fragment_mols;
  for (const Fragment& f : substituents()) fragment_mols.push_back(chem::parse_smiles(f.smiles));

  std::vector<std::string> corpus;
  corpus.reserve(config.size);
  int guard = 0;
  while (static_cast<int>(corpus.size()) < config.size) {
    if (++guard > config.size * 50) throw Error("corpus generation failed to converge");

    chem::Molecule mol = scaffold_mols[rng.below(scaffold_mols.size())];
    int n_subs = static_cast<int>(rng.below(config.max_substituents + 1));
    bool ok = true;
    for (int s = 0; s < n_subs; ++s) {
      // anchor on a carbon with a spare hydrogen
      std::vector<int> anchors;
      for (int i = 0; i < mol.atom_count(); ++i) {
        if (mol.atom(i).element == chem::Element::C && mol.atom(i).total_h() >= 1)
          anchors.push_back(i);
      }
      if (anchors.empty()) break;
      int anchor = anchors[rng.below(anchors.size())];
      const chem::Molecule& frag = fragment_mols[pick_weighted(rng, substituents())];
      if (!graft(mol, anchor, frag)) continue;
      try {
        mol.finalize(true);
      } catch (const Error&) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    try {
      mol.finalize(true);
      chem::Molecule perceived = chem::perceive_aromaticity(mol);
      if (!chem::sanitize(perceived).ok()) continue;
      std::string smiles = chem::write_smiles(perceived);
      chem::Molecule reparsed = chem::read_molecule(smiles);  // round-trip guarantee
      (void)reparsed;
      corpus.push_back(std::move(smiles));
    } catch (const Error&) {
      continue;
    }
  }
  return corpus;
}

std::vector<chem::Molecule> generate_corpus(const CorpusConfig& config) {
  std::vector<chem::Molecule> mols;
  for (const std::string& s : generate_corpus_smiles(config))
    mols.push_back(chem::read_molecule(s));
  return mols;
}

}  // namespace molsight::harness
