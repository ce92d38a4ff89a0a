//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <string>

#include "molsight/harness/surrogate.hpp"
#include "molsight/num/dense_net.hpp"
#include "molsight/num/scaler.hpp"
#include "molsight/probe/probe.hpp"
#include "molsight/sae/sae.hpp"

namespace molsight::io {

/// Versioned JSON checkpoints; 64-bit parameters survive save/load exactly
/// (shortest-round-trip number formatting).
struct CheckpointMeta {
  std::uint64_t seed = 0;
  std::string config_hash;
};

void save_sae(const std::string& path, const sae::SaeModel& model, const CheckpointMeta& meta);
sae::SaeModel load_sae(const std::string& path);

void save_surrogate(const std::string& path, const harness::SurrogateModel& model,
                    const CheckpointMeta& meta);
harness::SurrogateModel load_surrogate(const std::string& path);

void save_probe(const std::string& path, const probe::ProbeModel& model,
                const CheckpointMeta& meta);
probe::ProbeModel load_probe(const std::string& path);

}  // namespace molsight::io
