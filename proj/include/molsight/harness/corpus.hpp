//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "molsight/chem/molecule.hpp"

namespace molsight::harness {

struct CorpusConfig {
  int size = 2000;
  std::uint64_t seed = 1;
  int max_substituents = 4;
};

/// Deterministic synthetic corpus: scaffolds decorated with substituent
/// fragments, every molecule guaranteed to parse, sanitize and round-trip.
/// Covers the planted-motif vocabulary (halogens, nitriles, amides, ethers,
/// alcohols, charged groups, ...) at mid prevalences.
std::vector<std::string> generate_corpus_smiles(const CorpusConfig& config);
std::vector<chem::Molecule> generate_corpus(const CorpusConfig& config);

}  // namespace molsight::harness
