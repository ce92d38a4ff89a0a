//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "molsight/common.hpp"
#include "molsight/io/config.hpp"
#include "molsight/io/csv.hpp"
#include "molsight/num/rng.hpp"

namespace molsight::io {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

struct Field {
  std::function<std::string(const RunConfig&)> get;
  std::function<void(RunConfig&, const std::string&)> set;
};

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw Error("bad boolean value: " + v);
}

const std::map<std::string, Field>& fields() {
  static const std::map<std::string, Field> table = [] {
    std::map<std::string, Field> f;
    auto str = [&f](const std::string& key, std::string RunConfig::* member) {
      f[key] = {[member](const RunConfig& c) { return c.*member; },
                [member](RunConfig& c, const std::string& v) { c.*member = v; }};
    };
    auto integer = [&f](const std::string& key, int RunConfig::* member) {
      f[key] = {[member](const RunConfig& c) { return std::to_string(c.*member); },
                [member](RunConfig& c, const std::string& v) { c.*member = std::stoi(v); }};
    };
    auto u64 = [&f](const std::string& key, std::uint64_t RunConfig::* member) {
      f[key] = {[member](const RunConfig& c) { return std::to_string(c.*member); },
                [member](RunConfig& c, const std::string& v) { c.*member = std::stoull(v); }};
    };
    auto dbl = [&f](const std::string& key, double RunConfig::* member) {
      f[key] = {[member](const RunConfig& c) { return fmt_double(c.*member); },
                [member](RunConfig& c, const std::string& v) { c.*member = std::stod(v); }};
    };
    auto boolean = [&f](const std::string& key, bool RunConfig::* member) {
      f[key] = {[member](const RunConfig& c) { return c.*member ? "true" : "false"; },
                [member](RunConfig& c, const std::string& v) { c.*member = parse_bool(v); }};
    };

    str("paths.corpus", &RunConfig::corpus);
    str("paths.embeddings", &RunConfig::embeddings);
    str("paths.motifs", &RunConfig::motifs);
    str("paths.rules", &RunConfig::rules);
    str("paths.output_dir", &RunConfig::output_dir);
    str("paths.surrogate", &RunConfig::surrogate);
    str("paths.descriptors_csv", &RunConfig::descriptors_csv);
    str("paths.alerts", &RunConfig::alerts);

    u64("run.master_seed", &RunConfig::master_seed);
    integer("run.threads", &RunConfig::threads);
    dbl("run.test_fraction", &RunConfig::test_fraction);
    integer("run.sample_molecules", &RunConfig::sample_molecules);

    integer("harness.dim", &RunConfig::harness_dim);
    dbl("harness.sigma", &RunConfig::harness_sigma);
    boolean("harness.nonlinear", &RunConfig::harness_nonlinear);
    integer("harness.corpus_size", &RunConfig::harness_corpus_size);

    integer("sae.factors", &RunConfig::sae_factors);
    dbl("sae.l1", &RunConfig::sae_l1);
    integer("sae.epochs", &RunConfig::sae_epochs);
    integer("sae.batch", &RunConfig::sae_batch);
    dbl("sae.lr", &RunConfig::sae_lr);
    dbl("sae.dropout", &RunConfig::sae_dropout);
    boolean("sae.kl_aux", &RunConfig::sae_kl_aux);
    dbl("sae.target_sparsity", &RunConfig::sae_target_sparsity);
    dbl("sae.kl_weight", &RunConfig::sae_kl_weight);
    integer("sae.top_pairs", &RunConfig::sae_top_pairs);

    str("predictor.kind", &RunConfig::predictor_kind);
    integer("predictor.hidden", &RunConfig::predictor_hidden);
    integer("predictor.epochs", &RunConfig::predictor_epochs);
    integer("predictor.batch", &RunConfig::predictor_batch);
    dbl("predictor.lr", &RunConfig::predictor_lr);
    dbl("predictor.dropout", &RunConfig::predictor_dropout);

    integer("probe.epochs", &RunConfig::probe_epochs);
    integer("probe.batch", &RunConfig::probe_batch);
    dbl("probe.lr", &RunConfig::probe_lr);
    dbl("probe.dropout", &RunConfig::probe_dropout);
    str("probe.balancing", &RunConfig::probe_balancing);

    integer("ig.steps", &RunConfig::ig_steps);
    dbl("ig.percentile", &RunConfig::ig_percentile);
    dbl("ig.ring_boost", &RunConfig::ig_ring_boost);
    integer("ig.top_k", &RunConfig::ig_top_k);
    str("ig.baseline", &RunConfig::ig_baseline);

    integer("surrogate.epochs", &RunConfig::surrogate_epochs);
    integer("surrogate.batch", &RunConfig::surrogate_batch);
    dbl("surrogate.lr", &RunConfig::surrogate_lr);

    str("descriptors.qed_weights", &RunConfig::qed_weights);
    boolean("descriptors.tpsa_include_s_p", &RunConfig::tpsa_include_s_p);
    return f;
  }();
  return table;
}

}  // namespace

RunConfig RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path);
  RunConfig cfg;
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[' && t.back() == ']') {
      section = trim(t.substr(1, t.size() - 2));
      continue;
    }
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw Error("config line " + std::to_string(line_no) + " is not key = value");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    cfg.apply_override(section.empty() ? key : section + "." + key, value);
  }
  return cfg;
}

void RunConfig::apply_override(const std::string& key, const std::string& value) {
  auto it = fields().find(key);
  if (it == fields().end()) throw Error("unknown config key: " + key);
  try {
    it->second.set(*this, value);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error("bad value for config key " + key + ": " + value);
  }
}

std::string RunConfig::canonical_text() const {
  std::string out;
  for (const auto& [key, field] : fields()) {
    out += key;
    out += '=';
    out += field.get(*this);
    out += '\n';
  }
  return out;
}

std::string RunConfig::config_hash() const {
  std::uint64_t h = fnv1a64(canonical_text());
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t RunConfig::stage_seed(std::string_view stage) const {
  return num::derive_seed(master_seed, stage);
}

}  // namespace molsight::io
