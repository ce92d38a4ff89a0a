//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <Eigen/Core>
#include <string>

namespace molsight::io {

/// Binary embedding matrix: magic "MSEMB001", u32 version, u64 rows,
/// u64 cols, u8 dtype (0 = float32, 1 = float64), row-major little-endian
/// payload. A .csv path (header row, one row per molecule) is the fallback
/// ingestion format.
void write_embedding_file(const std::string& path, const Eigen::MatrixXd& h,
                          bool as_float32 = false);

Eigen::MatrixXd read_embedding_file(const std::string& path);

}  // namespace molsight::io
