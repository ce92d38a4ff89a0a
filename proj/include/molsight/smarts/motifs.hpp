//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <string>
#include <vector>

#include "molsight/smarts/match.hpp"

namespace molsight::smarts {

struct MotifEntry {
  std::string name;
  std::string smarts;
  Pattern pattern;
};

/// Ordered motif library; the shipped default carries the 40 motif names used
/// throughout the probe analyses. Definitions are a documented best-effort
/// reconstruction from the motif names and can be overridden with a library
/// file ("name<TAB>smarts" lines, '#' comments).
class MotifLibrary {
 public:
  static MotifLibrary default_library();
  static MotifLibrary from_file(const std::string& path);
  static MotifLibrary from_records(
      const std::vector<std::pair<std::string, std::string>>& records);

  int size() const { return static_cast<int>(entries_.size()); }
  const MotifEntry& entry(int i) const { return entries_[i]; }
  const std::vector<MotifEntry>& entries() const { return entries_; }
  int index_of(const std::string& name) const;  // -1 when absent

 private:
  std::vector<MotifEntry> entries_;
};

/// Binary presence vector over the library (entry m = 1 iff motif m matches).
std::vector<int> motif_labels(const chem::Molecule& mol, const MotifLibrary& lib);

/// Per-motif fraction of corpus molecules containing the motif.
/// Throws EmptyCorpus.
std::vector<double> motif_prevalence(const std::vector<chem::Molecule>& corpus,
                                     const MotifLibrary& lib);

}  // namespace molsight::smarts
