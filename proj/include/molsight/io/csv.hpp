//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <string>
#include <vector>

namespace molsight::io {

/// Shortest round-trip decimal form (std::to_chars); locale-free and
/// deterministic, used by every artifact writer.
std::string fmt_double(double v);

std::string csv_join(const std::vector<std::string>& fields);

/// Minimal CSV split; artifact files never quote fields.
std::vector<std::string> csv_split(const std::string& line);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

std::vector<std::vector<std::string>> read_csv(const std::string& path);

}  // namespace molsight::io
