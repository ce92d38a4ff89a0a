//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <Eigen/Core>
#include <array>
#include <vector>

#include "molsight/chem/molecule.hpp"
#include "molsight/desc/qed.hpp"
#include "molsight/smarts/motifs.hpp"

namespace molsight::desc {

/// Version identifiers for the embedded contribution tables, echoed in
/// descriptor output metadata.
inline constexpr std::string_view kTpsaTableVersion = "ertl-2000.v1";
inline constexpr std::string_view kCrippenTableVersion = "wildman-crippen-1999.v1";

struct DescriptorOptions {
  bool tpsa_include_s_p = false;  // S/P polar contributions (off by default)
  QedWeights qed_weights = QedWeights::Mean;
  const smarts::MotifLibrary* alert_library = nullptr;  // QED structural alerts
};

struct DescriptorRecord {
  // the six reward signals
  double drug_likeness = 0;  // QED
  double complexity = 0;     // Bertz-style graph index
  double lipophilicity = 0;  // Crippen logP
  double size = 0;           // molecular weight, Da
  double polarity = 0;       // TPSA, A^2
  int flexibility = 0;       // rotatable bonds
  // QED inputs
  double mw = 0;
  double logp = 0;
  double psa = 0;
  int hba = 0;
  int hbd = 0;
  int rotb = 0;
  int arom_rings = 0;
  int alerts = 0;
};

inline constexpr std::array<const char*, 6> kRewardSignalNames = {
    "drug_likeness", "complexity", "lipophilicity", "size", "polarity", "flexibility"};

/// Ertl TPSA. Contributions over N/O environments; S/P behind the flag.
double ertl_tpsa(const chem::Molecule& mol, bool include_s_p = false);
std::vector<double> tpsa_atom_contributions(const chem::Molecule& mol,
                                            bool include_s_p = false);

/// Wildman-Crippen logP. Per-atom values include the attached hydrogens.
double crippen_logp(const chem::Molecule& mol);
std::vector<double> crippen_atom_contributions(const chem::Molecule& mol);

/// Information index over atom (element, degree, aromaticity) classes and
/// bond classes plus a branching term; the repo's "complexity" signal.
double bertz_complexity(const chem::Molecule& mol);

double molecular_weight(const chem::Molecule& mol);
/// Lipinski conventions: HBA = N+O count, HBD = total H on N/O.
int hba_count(const chem::Molecule& mol);
int hbd_count(const chem::Molecule& mol);
/// Non-ring single bonds between heavy atoms of degree >= 2, amide C-N excluded.
int rotatable_bond_count(const chem::Molecule& mol);
int aromatic_ring_count(const chem::Molecule& mol);

/// Requires aromaticity-perceived input.
DescriptorRecord compute_descriptors(const chem::Molecule& mol,
                                     const DescriptorOptions& opts = {});

struct RewardMatrix {
  Eigen::MatrixXd values;  // N x 6, column order = kRewardSignalNames
  Eigen::VectorXd mean;    // per signal
  Eigen::VectorXd stddev;  // population std per signal
};

/// Throws EmptyCorpus.
RewardMatrix reward_matrix(const std::vector<chem::Molecule>& corpus,
                           const DescriptorOptions& opts = {});

Eigen::VectorXd record_to_signals(const DescriptorRecord& rec);

}  // namespace molsight::desc
