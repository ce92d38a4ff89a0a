//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <fstream>
#include <istream>

#include "molsight/chem/smiles_io.hpp"
#include "molsight/common.hpp"

namespace molsight::chem {

std::vector<SmilesRecord> read_smiles_lines(std::istream& in) {
  std::vector<SmilesRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') continue;
    SmilesRecord rec;
    rec.line = line_no;
    size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      rec.smiles = line;
    } else {
      rec.smiles = line.substr(0, tab);
      rec.name = line.substr(tab + 1);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<SmilesRecord> read_smiles_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open SMILES file: " + path);
  return read_smiles_lines(in);
}

}  // namespace molsight::chem
