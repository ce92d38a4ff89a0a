//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <cstdint>
#include <cstring>
#include <fstream>

#include "molsight/common.hpp"
#include "molsight/io/csv.hpp"
#include "molsight/io/embedding_file.hpp"

namespace molsight::io {

namespace {
constexpr char kMagic[8] = {'M', 'S', 'E', 'M', 'B', '0', '0', '1'};
}

void write_embedding_file(const std::string& path, const Eigen::MatrixXd& h,
                          bool as_float32) {
  if (h.rows() <= 0 || h.cols() <= 0) throw Error("cannot write empty embedding matrix");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write embedding file: " + path);
  out.write(kMagic, 8);
  std::uint32_t version = 1;
  std::uint64_t n = static_cast<std::uint64_t>(h.rows());
  std::uint64_t d = static_cast<std::uint64_t>(h.cols());
  std::uint8_t dtype = as_float32 ? 0 : 1;
  out.write(reinterpret_cast<const char*>(&version), sizeof(version));
  out.write(reinterpret_cast<const char*>(&n), sizeof(n));
  out.write(reinterpret_cast<const char*>(&d), sizeof(d));
  out.write(reinterpret_cast<const char*>(&dtype), sizeof(dtype));
  for (Eigen::Index r = 0; r < h.rows(); ++r) {
    for (Eigen::Index c = 0; c < h.cols(); ++c) {
      if (as_float32) {
        float v = static_cast<float>(h(r, c));
        out.write(reinterpret_cast<const char*>(&v), sizeof(v));
      } else {
        double v = h(r, c);
        out.write(reinterpret_cast<const char*>(&v), sizeof(v));
      }
    }
  }
  if (!out) throw Error("embedding write failed: " + path);
}

Eigen::MatrixXd read_embedding_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read embedding file: " + path);
  char magic[8];
  if (in.read(magic, 8) && std::memcmp(magic, kMagic, 8) == 0) {
    std::uint32_t version = 0;
    std::uint64_t n = 0, d = 0;
    std::uint8_t dtype = 0;
    in.read(reinterpret_cast<char*>(&version), sizeof(version));
    in.read(reinterpret_cast<char*>(&n), sizeof(n));
    in.read(reinterpret_cast<char*>(&d), sizeof(d));
    in.read(reinterpret_cast<char*>(&dtype), sizeof(dtype));
    if (!in || version != 1) throw Error("bad embedding header: " + path);
    if (n == 0 || d == 0) throw Error("embedding file with empty payload: " + path);
    Eigen::MatrixXd h(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
    for (std::uint64_t r = 0; r < n; ++r) {
      for (std::uint64_t c = 0; c < d; ++c) {
        if (dtype == 0) {
          float v;
          in.read(reinterpret_cast<char*>(&v), sizeof(v));
          h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
        } else {
          double v;
          in.read(reinterpret_cast<char*>(&v), sizeof(v));
          h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
        }
      }
    }
    if (!in) throw Error("embedding payload truncated: " + path);
    return h;
  }

  // CSV fallback: header row then numeric rows
  auto rows = read_csv(path);
  if (rows.size() < 2) throw Error("embedding CSV needs a header and data rows: " + path);
  size_t d = rows[0].size();
  Eigen::MatrixXd h(static_cast<Eigen::Index>(rows.size() - 1), static_cast<Eigen::Index>(d));
  for (size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != d) throw Error("ragged embedding CSV row: " + path);
    for (size_t c = 0; c < d; ++c)
      h(static_cast<Eigen::Index>(r - 1), static_cast<Eigen::Index>(c)) =
          std::stod(rows[r][c]);
  }
  return h;
}

}  // namespace molsight::io
