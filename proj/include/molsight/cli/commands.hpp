//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <string>

#include "molsight/io/config.hpp"

namespace molsight::cli {

// Exit codes: 0 success, 1 partial-stage failure, 2 input error.
int cmd_parse(const io::RunConfig& cfg);
int cmd_descriptors(const io::RunConfig& cfg);
int cmd_embed(const io::RunConfig& cfg);
int cmd_sae_train(const io::RunConfig& cfg);
int cmd_sae_analyze(const io::RunConfig& cfg);
int cmd_probe(const io::RunConfig& cfg);
int cmd_saliency(const io::RunConfig& cfg, const std::string& smiles = "");
int cmd_counterfactual(const io::RunConfig& cfg, const std::string& smiles);
int cmd_analyze(const io::RunConfig& cfg);
int cmd_report(const io::RunConfig& cfg);

}  // namespace molsight::cli
