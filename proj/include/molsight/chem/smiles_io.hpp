//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace molsight::chem {

/// One record of a SMILES text file: one molecule per line, optional
/// tab-separated name, '#' comment lines ignored, LF or CRLF endings.
struct SmilesRecord {
  int line = 0;  // 1-based
  std::string smiles;
  std::string name;
};

std::vector<SmilesRecord> read_smiles_lines(std::istream& in);
std::vector<SmilesRecord> read_smiles_file(const std::string& path);

}  // namespace molsight::chem
