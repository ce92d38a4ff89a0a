//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <fstream>

#include "molsight/smarts/motifs.hpp"

namespace molsight::smarts {

namespace {

// Shipped default motif definitions (data/motifs.txt carries the same table).
constexpr std::pair<const char*, const char*> kDefaultMotifs[] = {
    {"positive_ionizable", "[+]"},
    {"halogen_F", "[F]"},
    {"halogen_Br", "[Br]"},
    {"aromatic_ring", "a"},
    {"halogen_Cl", "[Cl]"},
    {"nitro", "[N+](=[OX1])[O-]"},
    {"negative_ionizable", "[-]"},
    {"sulfone", "[SX4](=[OX1])=[OX1]"},
    {"nitrile", "[CX2]#[NX1]"},
    {"methyl", "[CX4H3]"},
    {"amine_primary", "[NX3H2]"},
    {"aromatic_S", "[s]"},
    {"aromatic_N", "[n]"},
    {"amine_tertiary", "[NX3H0]"},
    {"alcohol", "[#6][OX2H]"},
    {"methylene", "[CX4H2]"},
    {"terminal_alkyne", "[CX2H1]#[CX2]"},
    {"thiophene", "c1ccsc1"},
    {"aromatic_O", "[o]"},
    {"hbond_acceptor", "[#7,#8]"},
    {"phenyl", "c1ccccc1"},
    {"benzene", "c1ccccc1"},
    {"carboxylic_acid", "[CX3](=[OX1])[OX2H1]"},
    {"quaternary_carbon", "[CX4]([#6])([#6])([#6])[#6]"},
    {"triple_bond", "[#6]#[#6]"},
    {"hbond_donor", "[#7,#8;!H0]"},
    {"ether", "[OX2]([#6])[#6]"},
    {"amide", "[CX3](=[OX1])[NX3]"},
    {"ester", "[CX3](=[OX1])[OX2][#6]"},
    {"double_bond", "[#6]=[#6]"},
    {"vinyl", "[CX3H2]=[CX3H1]"},
    {"amine_secondary", "[NX3H1]"},
    {"cyclohexane", "C1CCCCC1"},
    {"methine", "[CX4H1]"},
    {"pyridine", "c1ccncc1"},
    {"cyclopentane", "C1CCCC1"},
    {"allyl", "[CX3H2]=[CX3H1][CX4H2]"},
    {"cyclopropane", "C1CC1"},
    {"phenol", "[OX2H]c1ccccc1"},
    {"ketone", "[#6][CX3](=[OX1])[#6]"},
};

}  // namespace

MotifLibrary MotifLibrary::from_records(
    const std::vector<std::pair<std::string, std::string>>& records) {
  MotifLibrary lib;
  for (const auto& [name, smarts] : records) {
    for (const MotifEntry& e : lib.entries_) {
      if (e.name == name) throw Error("duplicate motif name: " + name);
    }
    lib.entries_.push_back(MotifEntry{name, smarts, compile_pattern(smarts)});
  }
  return lib;
}

MotifLibrary MotifLibrary::default_library() {
  std::vector<std::pair<std::string, std::string>> records;
  for (const auto& [name, smarts] : kDefaultMotifs) records.push_back({name, smarts});
  return from_records(records);
}

MotifLibrary MotifLibrary::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open motif library: " + path);
  std::vector<std::pair<std::string, std::string>> records;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find_first_of("\t ");
    if (tab == std::string::npos) throw Error("motif line needs 'name<TAB>smarts': " + line);
    std::string name = line.substr(0, tab);
    size_t rest = line.find_first_not_of("\t ", tab);
    if (rest == std::string::npos) throw Error("motif line missing SMARTS: " + line);
    records.push_back({name, line.substr(rest)});
  }
  return from_records(records);
}

int MotifLibrary::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (entries_[i].name == name) return i;
  return -1;
}

std::vector<int> motif_labels(const chem::Molecule& mol, const MotifLibrary& lib) {
  std::vector<int> labels(lib.size(), 0);
  for (int m = 0; m < lib.size(); ++m)
    labels[m] = has_match(lib.entry(m).pattern, mol) ? 1 : 0;
  return labels;
}

std::vector<double> motif_prevalence(const std::vector<chem::Molecule>& corpus,
                                     const MotifLibrary& lib) {
  if (corpus.empty()) throw EmptyCorpus("motif_prevalence over empty corpus");
  std::vector<double> prevalence(lib.size(), 0.0);
  for (const chem::Molecule& mol : corpus) {
    std::vector<int> labels = motif_labels(mol, lib);
    for (int m = 0; m < lib.size(); ++m) prevalence[m] += labels[m];
  }
  for (double& p : prevalence) p /= static_cast<double>(corpus.size());
  return prevalence;
}

}  // namespace molsight::smarts
