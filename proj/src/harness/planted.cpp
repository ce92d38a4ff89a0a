//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <cmath>

#include <json.hpp>

#include "molsight/harness/planted.hpp"
#include "molsight/num/rng.hpp"

namespace molsight::harness {

using Eigen::MatrixXd;
using Eigen::VectorXd;

PlantedSpec PlantedSpec::default_spec() {
  PlantedSpec spec;
  spec.signals = {
      {PlantedSignal::Kind::Descriptor, "drug_likeness", 1.5},
      {PlantedSignal::Kind::Descriptor, "complexity", 3.0},
      {PlantedSignal::Kind::Descriptor, "lipophilicity", 3.0},
      {PlantedSignal::Kind::Descriptor, "size", 4.0},
      {PlantedSignal::Kind::Descriptor, "polarity", 4.0},
      {PlantedSignal::Kind::Descriptor, "flexibility", 3.0},
      {PlantedSignal::Kind::Motif, "aromatic_ring", 3.0},
      {PlantedSignal::Kind::Motif, "halogen_F", 3.0},
      {PlantedSignal::Kind::Motif, "halogen_Cl", 3.0},
      {PlantedSignal::Kind::Motif, "nitrile", 3.0},
      {PlantedSignal::Kind::Motif, "amide", 3.0},
      {PlantedSignal::Kind::Motif, "alcohol", 3.0},
      {PlantedSignal::Kind::Motif, "ether", 3.0},
      {PlantedSignal::Kind::Motif, "methyl", 3.0},
  };
  return spec;
}

std::string GroundTruthLedger::to_json() const {
  nlohmann::json j;
  j["dim"] = dim;
  j["noise_sigma"] = noise_sigma;
  j["seed"] = seed;
  j["nonlinear_mix"] = nonlinear_mix;
  j["signals"] = nlohmann::json::array();
  for (const Entry& e : entries) {
    nlohmann::json s;
    s["name"] = e.signal.name;
    s["kind"] = e.signal.kind == PlantedSignal::Kind::Descriptor ? "descriptor" : "motif";
    s["gain"] = e.signal.gain;
    s["carrier"] = std::vector<double>(e.carrier.data(), e.carrier.data() + e.carrier.size());
    j["signals"].push_back(std::move(s));
  }
  return j.dump(2);
}

namespace {

int find_name(const std::vector<std::string>& names, const std::string& name) {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

VectorXd standardized(const VectorXd& v, const std::string& name) {
  double mean = v.mean();
  double sd = std::sqrt((v.array() - mean).square().mean());
  if (sd < 1e-12)
    throw SpecInvalid("planted source signal '" + name + "' is constant over the corpus");
  return (v.array() - mean) / sd;
}

}  // namespace

EmbeddingResult generate_embeddings(const MatrixXd& reward_signals,
                                    const std::vector<std::string>& reward_names,
                                    const MatrixXd& motif_labels,
                                    const std::vector<std::string>& motif_names,
                                    const PlantedSpec& spec) {
  const Eigen::Index n = reward_signals.rows();
  if (motif_labels.rows() != 0 && motif_labels.rows() != n)
    throw ShapeMismatch("generate_embeddings: motif label row count mismatch");
  if (spec.dim <= 0 || spec.signals.empty())
    throw SpecInvalid("embedding spec needs a positive dim and at least one signal");
  if (static_cast<int>(spec.signals.size()) > spec.dim)
    throw SpecInvalid("more planted signals than embedding dimensions");

  // sources
  std::vector<VectorXd> sources;
  for (const PlantedSignal& sig : spec.signals) {
    // gain 0 plants nothing; useful as a null control
    if (sig.gain < 0) throw SpecInvalid("planted gain must be nonnegative: " + sig.name);
    if (sig.kind == PlantedSignal::Kind::Descriptor) {
      int idx = find_name(reward_names, sig.name);
      if (idx < 0) throw SpecInvalid("unknown descriptor signal: " + sig.name);
      sources.push_back(standardized(reward_signals.col(idx), sig.name));
    } else {
      int idx = find_name(motif_names, sig.name);
      if (idx < 0) throw SpecInvalid("unknown motif signal: " + sig.name);
      sources.push_back(standardized(motif_labels.col(idx), sig.name));
    }
  }

  // orthonormal carriers via Gram-Schmidt over seeded gaussian draws
  num::Rng carrier_rng(num::derive_seed(spec.seed, "carriers"));
  std::vector<VectorXd> carriers;
  auto draw_carrier = [&]() {
    VectorXd c(spec.dim);
    for (int i = 0; i < spec.dim; ++i) c[i] = carrier_rng.normal();
    for (const VectorXd& prev : carriers) c -= prev.dot(c) * prev;
    double norm = c.norm();
    if (norm < 1e-8) throw SpecInvalid("dependent carrier directions");
    c /= norm;
    carriers.push_back(c);
    return c;
  };

  GroundTruthLedger ledger;
  ledger.dim = spec.dim;
  ledger.noise_sigma = spec.noise_sigma;
  ledger.seed = spec.seed;
  ledger.nonlinear_mix = spec.nonlinear_mix;

  MatrixXd h = MatrixXd::Zero(n, spec.dim);
  for (size_t j = 0; j < spec.signals.size(); ++j) {
    VectorXd carrier = draw_carrier();
    h.noalias() += spec.signals[j].gain * sources[j] * carrier.transpose();
    ledger.entries.push_back({spec.signals[j], carrier});
  }

  if (spec.nonlinear_mix) {
    // tanh interactions of adjacent planted sources on fresh carriers
    for (size_t j = 0; j + 1 < sources.size(); ++j) {
      if (static_cast<int>(carriers.size()) >= spec.dim) break;
      VectorXd carrier = draw_carrier();
      VectorXd inter = (sources[j].array() * sources[j + 1].array()).tanh();
      h.noalias() += inter.matrix() * carrier.transpose();
    }
  }

  if (spec.noise_sigma > 0) {
    num::Rng noise_rng(num::derive_seed(spec.seed, "noise"));
    for (Eigen::Index r = 0; r < n; ++r)
      for (int c = 0; c < spec.dim; ++c) h(r, c) += spec.noise_sigma * noise_rng.normal();
  }

  return {std::move(h), std::move(ledger)};
}

}  // namespace molsight::harness
