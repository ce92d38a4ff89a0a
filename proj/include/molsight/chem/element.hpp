//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace molsight::chem {

/// Supported element set. SMILES outside this set is rejected.
enum class Element : std::uint8_t { B, C, N, O, P, S, F, Cl, Br, I };

inline constexpr int kElementCount = 10;

std::string_view symbol(Element e);
int atomic_number(Element e);

/// Conventional atomic weight (CIAAW, abridged); hydrogen weight below.
double atomic_weight(Element e);
inline constexpr double kHydrogenWeight = 1.008;

std::optional<Element> element_from_symbol(std::string_view s);

/// True for elements that may carry an aromatic flag in SMILES input
/// (lowercase b, c, n, o, p, s).
bool aromatic_input_allowed(Element e);

/// Default valences used for implicit-hydrogen resolution, smallest first.
/// Charge shifts the table: N+ -> 4, O+ -> 3, N-/O-/S- shrink, B- -> 4, etc.
/// Returns an empty span when no valence model exists for the charge state.
struct ValenceList {
  std::array<int, 3> v{0, 0, 0};
  int n = 0;
  const int* begin() const { return v.data(); }
  const int* end() const { return v.data() + n; }
  bool empty() const { return n == 0; }
  int max() const { return n == 0 ? 0 : v[n - 1]; }
};

ValenceList default_valences(Element e, int charge);

/// Maximum allowed valence for sanitization; nullopt when the charge state
/// has no defined valence model.
std::optional<int> max_valence(Element e, int charge);

}  // namespace molsight::chem
