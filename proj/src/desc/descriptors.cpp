//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <cmath>
#include <map>

#include "molsight/desc/descriptors.hpp"

namespace molsight::desc {

using chem::BondOrder;
using chem::Element;
using chem::Molecule;
using chem::Neighbor;

double molecular_weight(const Molecule& mol) {
  double mw = 0.0;
  for (int i = 0; i < mol.atom_count(); ++i) {
    mw += chem::atomic_weight(mol.atom(i).element);
    mw += mol.atom(i).total_h() * chem::kHydrogenWeight;
  }
  return mw;
}

int hba_count(const Molecule& mol) {
  int n = 0;
  for (const chem::Atom& a : mol.atoms())
    if (a.element == Element::N || a.element == Element::O) ++n;
  return n;
}

int hbd_count(const Molecule& mol) {
  int n = 0;
  for (const chem::Atom& a : mol.atoms())
    if (a.element == Element::N || a.element == Element::O) n += a.total_h();
  return n;
}

namespace {

bool is_amide_cn(const Molecule& mol, int c, int n) {
  if (mol.atom(c).element != Element::C || mol.atom(n).element != Element::N) return false;
  for (const Neighbor& nb : mol.neighbors(c)) {
    if (mol.bond(nb.bond).order == BondOrder::Double &&
        mol.atom(nb.atom).element == Element::O)
      return true;
  }
  return false;
}

}  // namespace

int rotatable_bond_count(const Molecule& mol) {
  int count = 0;
  for (int i = 0; i < mol.bond_count(); ++i) {
    const chem::Bond& b = mol.bond(i);
    if (b.order != BondOrder::Single || b.aromatic) continue;
    if (mol.bond_in_ring(i)) continue;
    if (mol.heavy_degree(b.a) < 2 || mol.heavy_degree(b.b) < 2) continue;
    if (is_amide_cn(mol, b.a, b.b) || is_amide_cn(mol, b.b, b.a)) continue;
    ++count;
  }
  return count;
}

int aromatic_ring_count(const Molecule& mol) {
  int count = 0;
  for (const auto& ring : mol.rings()) {
    bool all = true;
    for (int a : ring) {
      if (!mol.atom(a).aromatic) {
        all = false;
        break;
      }
    }
    if (all && !ring.empty()) ++count;
  }
  return count;
}

double bertz_complexity(const Molecule& mol) {
  auto plog2 = [](double x) { return x > 0 ? x * std::log2(x) : 0.0; };

  // element/degree/aromaticity information over atoms
  std::map<std::tuple<Element, int, bool>, int> atom_classes;
  for (int i = 0; i < mol.atom_count(); ++i)
    ++atom_classes[{mol.atom(i).element, mol.heavy_degree(i), mol.atom(i).aromatic}];
  double i_atoms = plog2(mol.atom_count());
  for (const auto& [cls, cnt] : atom_classes) i_atoms -= plog2(cnt);

  // bond class information
  std::map<std::tuple<int, int, int>, int> bond_classes;
  for (int i = 0; i < mol.bond_count(); ++i) {
    const chem::Bond& b = mol.bond(i);
    int ea = static_cast<int>(mol.atom(b.a).element);
    int eb = static_cast<int>(mol.atom(b.b).element);
    if (ea > eb) std::swap(ea, eb);
    int cls = b.aromatic || b.order == BondOrder::Aromatic ? 4 : static_cast<int>(b.order);
    ++bond_classes[{ea, eb, cls}];
  }
  double i_bonds = plog2(mol.bond_count());
  for (const auto& [cls, cnt] : bond_classes) i_bonds -= plog2(cnt);

  // branching term: pairs of bonds sharing an atom
  double pairs = 0;
  for (int i = 0; i < mol.atom_count(); ++i) {
    double d = mol.heavy_degree(i);
    pairs += d * (d - 1) / 2.0;
  }
  double i_branch = 2.0 * plog2(pairs);

  return i_atoms + i_bonds + i_branch;
}

DescriptorRecord compute_descriptors(const Molecule& mol, const DescriptorOptions& opts) {
  DescriptorRecord rec;
  rec.mw = molecular_weight(mol);
  rec.psa = ertl_tpsa(mol, opts.tpsa_include_s_p);
  rec.logp = crippen_logp(mol);
  rec.hba = hba_count(mol);
  rec.hbd = hbd_count(mol);
  rec.rotb = rotatable_bond_count(mol);
  rec.arom_rings = aromatic_ring_count(mol);
  rec.alerts = 0;
  if (opts.alert_library) {
    for (const auto& entry : opts.alert_library->entries())
      if (smarts::has_match(entry.pattern, mol)) ++rec.alerts;
  }

  rec.size = rec.mw;
  rec.polarity = rec.psa;
  rec.lipophilicity = rec.logp;
  rec.flexibility = rec.rotb;
  rec.complexity = bertz_complexity(mol);
  rec.drug_likeness = qed(rec, opts.qed_weights).value;
  return rec;
}

Eigen::VectorXd record_to_signals(const DescriptorRecord& rec) {
  Eigen::VectorXd v(6);
  v << rec.drug_likeness, rec.complexity, rec.lipophilicity, rec.size, rec.polarity,
      static_cast<double>(rec.flexibility);
  return v;
}

RewardMatrix reward_matrix(const std::vector<Molecule>& corpus, const DescriptorOptions& opts) {
  if (corpus.empty()) throw EmptyCorpus("reward_matrix over empty corpus");
  RewardMatrix rm;
  rm.values.resize(static_cast<Eigen::Index>(corpus.size()), 6);
  for (size_t i = 0; i < corpus.size(); ++i) {
    rm.values.row(static_cast<Eigen::Index>(i)) =
        record_to_signals(compute_descriptors(corpus[i], opts)).transpose();
  }
  rm.mean = rm.values.colwise().mean();
  Eigen::MatrixXd centered = rm.values.rowwise() - rm.mean.transpose();
  rm.stddev = (centered.array().square().colwise().mean()).sqrt();
  return rm;
}

}  // namespace molsight::desc
