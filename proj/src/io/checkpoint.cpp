//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <json.hpp>

#include "molsight/io/checkpoint.hpp"
#include "molsight/io/csv.hpp"

namespace molsight::io {

using nlohmann::json;

namespace {

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json& j) {
  if (j.empty()) return Eigen::MatrixXd(0, 0);
  Eigen::MatrixXd m(static_cast<Eigen::Index>(j.size()),
                    static_cast<Eigen::Index>(j[0].size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = j[r][c].get<double>();
  return m;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Eigen::VectorXd vector_from_json(const json& j) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = j[i].get<double>();
  return v;
}

json net_to_json(const num::DenseNet& net) {
  json j;
  j["dims"] = net.dims();
  j["dropout"] = net.dropout();
  j["weights"] = json::array();
  j["biases"] = json::array();
  for (const auto& w : net.weights()) j["weights"].push_back(matrix_to_json(w));
  for (const auto& b : net.biases()) j["biases"].push_back(vector_to_json(b));
  return j;
}

num::DenseNet net_from_json(const json& j) {
  std::vector<int> dims = j.at("dims").get<std::vector<int>>();
  std::vector<double> dropout = j.at("dropout").get<std::vector<double>>();
  std::vector<Eigen::MatrixXd> weights;
  std::vector<Eigen::VectorXd> biases;
  for (const auto& w : j.at("weights")) weights.push_back(matrix_from_json(w));
  for (const auto& b : j.at("biases")) biases.push_back(vector_from_json(b));
  return num::DenseNet(dims, dropout, std::move(weights), std::move(biases));
}

json meta_to_json(const CheckpointMeta& meta) {
  json j;
  j["seed"] = meta.seed;
  j["config_hash"] = meta.config_hash;
  return j;
}

void write_json(const std::string& path, const json& j) {
  write_text_file(path, j.dump(1) + "\n");
}

json parse_file(const std::string& path) { return json::parse(read_text_file(path)); }

}  // namespace

void save_sae(const std::string& path, const sae::SaeModel& model,
              const CheckpointMeta& meta) {
  json j;
  j["format"] = "molsight-sae";
  j["version"] = 1;
  j["meta"] = meta_to_json(meta);
  j["encoder_w"] = matrix_to_json(model.encoder_w);
  j["encoder_b"] = vector_to_json(model.encoder_b);
  j["decoder_w"] = matrix_to_json(model.decoder_w);
  j["decoder_b"] = vector_to_json(model.decoder_b);
  json cfg;
  cfg["factors"] = model.config.factors;
  cfg["l1"] = model.config.l1;
  cfg["epochs"] = model.config.epochs;
  cfg["batch_size"] = model.config.batch_size;
  cfg["learning_rate"] = model.config.learning_rate;
  cfg["dropout"] = model.config.dropout;
  cfg["seed"] = model.config.seed;
  cfg["kl_sparsity_aux"] = model.config.kl_sparsity_aux;
  cfg["target_sparsity"] = model.config.target_sparsity;
  cfg["kl_weight"] = model.config.kl_weight;
  j["config"] = std::move(cfg);
  write_json(path, j);
}

sae::SaeModel load_sae(const std::string& path) {
  json j = parse_file(path);
  if (j.value("format", "") != "molsight-sae") throw Error("not an SAE checkpoint: " + path);
  sae::SaeModel model;
  model.encoder_w = matrix_from_json(j.at("encoder_w"));
  model.encoder_b = vector_from_json(j.at("encoder_b"));
  model.decoder_w = matrix_from_json(j.at("decoder_w"));
  model.decoder_b = vector_from_json(j.at("decoder_b"));
  const json& cfg = j.at("config");
  model.config.factors = cfg.at("factors").get<int>();
  model.config.l1 = cfg.at("l1").get<double>();
  model.config.epochs = cfg.at("epochs").get<int>();
  model.config.batch_size = cfg.at("batch_size").get<int>();
  model.config.learning_rate = cfg.at("learning_rate").get<double>();
  model.config.dropout = cfg.at("dropout").get<double>();
  model.config.seed = cfg.at("seed").get<std::uint64_t>();
  model.config.kl_sparsity_aux = cfg.at("kl_sparsity_aux").get<bool>();
  model.config.target_sparsity = cfg.at("target_sparsity").get<double>();
  model.config.kl_weight = cfg.at("kl_weight").get<double>();
  return model;
}

void save_surrogate(const std::string& path, const harness::SurrogateModel& model,
                    const CheckpointMeta& meta) {
  json j;
  j["format"] = "molsight-surrogate";
  j["version"] = 1;
  j["meta"] = meta_to_json(meta);
  j["atom_net"] = net_to_json(model.atom_net());
  j["head_net"] = net_to_json(model.head_net());
  j["feature_mean"] = vector_to_json(model.feature_mean().transpose());
  j["feature_scale"] = vector_to_json(model.feature_scale().transpose());
  write_json(path, j);
}

harness::SurrogateModel load_surrogate(const std::string& path) {
  json j = parse_file(path);
  if (j.value("format", "") != "molsight-surrogate")
    throw Error("not a surrogate checkpoint: " + path);
  harness::SurrogateModel model(net_from_json(j.at("atom_net")),
                                net_from_json(j.at("head_net")));
  Eigen::VectorXd mean = vector_from_json(j.at("feature_mean"));
  Eigen::VectorXd scale = vector_from_json(j.at("feature_scale"));
  if (mean.size() > 0) model.set_normalization(mean.transpose(), scale.transpose());
  return model;
}

void save_probe(const std::string& path, const probe::ProbeModel& model,
                const CheckpointMeta& meta) {
  json j;
  j["format"] = "molsight-probe";
  j["version"] = 1;
  j["meta"] = meta_to_json(meta);
  j["motif"] = model.motif;
  j["net"] = net_to_json(model.net);
  j["scaler_mean"] = vector_to_json(model.scaler.mean());
  j["scaler_std"] = vector_to_json(model.scaler.stddev());
  write_json(path, j);
}

probe::ProbeModel load_probe(const std::string& path) {
  json j = parse_file(path);
  if (j.value("format", "") != "molsight-probe")
    throw Error("not a probe checkpoint: " + path);
  probe::ProbeModel model;
  model.motif = j.at("motif").get<std::string>();
  model.net = net_from_json(j.at("net"));
  model.scaler = num::Scaler(vector_from_json(j.at("scaler_mean")),
                             vector_from_json(j.at("scaler_std")));
  model.scaler_hash = model.scaler.params_hash();
  return model;
}

}  // namespace molsight::io
