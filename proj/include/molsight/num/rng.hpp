//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "molsight/common.hpp"

namespace molsight::num {

/// xoshiro256++ seeded through splitmix64. No global state; every randomized
/// stage takes an explicit seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  /// uniform in [0, 1)
  double next_double();
  /// uniform in [lo, hi)
  double uniform(double lo, double hi);
  /// standard normal via Box-Muller (deterministic, no cached spare)
  double normal();
  /// uniform integer in [0, n)
  std::uint64_t below(std::uint64_t n);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t s_[4];
};

/// Named-stage seed derivation: child = splitmix64(master ^ fnv1a64(name)).
std::uint64_t derive_seed(std::uint64_t master, std::string_view stage_name);

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace molsight::num
