//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <optional>

#include "molsight/cli/commands.hpp"
#include "molsight/common.hpp"

using molsight::io::RunConfig;

namespace {

struct CommonFlags {
  std::string config_path;
  std::string corpus, embeddings, motifs, rules, surrogate, output_dir;
  std::vector<std::string> sets;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
};

void add_common(CLI::App* app, CommonFlags& flags) {
  app->add_option("--config", flags.config_path, "INI config file");
  app->add_option("--corpus", flags.corpus, "SMILES corpus (one molecule per line)");
  app->add_option("--embeddings", flags.embeddings, "embedding file (binary or CSV)");
  app->add_option("--motifs", flags.motifs, "motif library file (name<TAB>smarts)");
  app->add_option("--rules", flags.rules, "transformation rules file");
  app->add_option("--surrogate", flags.surrogate, "surrogate model checkpoint");
  app->add_option("--output-dir,-o", flags.output_dir, "artifact output directory");
  app->add_option("--seed", flags.seed, "master seed");
  app->add_option("--threads", flags.threads,
                  "parallelism cap (1 guarantees bit-reproducibility)");
  app->add_option("--set", flags.sets, "override any config key: section.key=value")
      ->take_all();
}

// precedence: defaults < config file < --set < dedicated flags
RunConfig build_config(const CommonFlags& flags) {
  RunConfig cfg;
  if (!flags.config_path.empty()) cfg = RunConfig::load_file(flags.config_path);
  for (const std::string& kv : flags.sets) {
    size_t eq = kv.find('=');
    if (eq == std::string::npos)
      throw molsight::Error("--set expects section.key=value, got: " + kv);
    cfg.apply_override(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (!flags.corpus.empty()) cfg.corpus = flags.corpus;
  if (!flags.embeddings.empty()) cfg.embeddings = flags.embeddings;
  if (!flags.motifs.empty()) cfg.motifs = flags.motifs;
  if (!flags.rules.empty()) cfg.rules = flags.rules;
  if (!flags.surrogate.empty()) cfg.surrogate = flags.surrogate;
  if (!flags.output_dir.empty()) cfg.output_dir = flags.output_dir;
  if (flags.seed) cfg.master_seed = *flags.seed;
  if (flags.threads) cfg.threads = *flags.threads;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"molsight: interpretability toolkit for molecular embeddings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(molsight::kVersion));

  struct Sub {
    CLI::App* app;
    CommonFlags flags;
    std::string smiles;
  };
  std::map<std::string, Sub> subs;
  auto make = [&](const std::string& name, const std::string& desc, bool with_smiles,
                  bool smiles_required = false) {
    Sub& sub = subs[name];  // map nodes are stable; CLI11 keeps pointers into them
    sub.app = app.add_subcommand(name, desc);
    add_common(sub.app, sub.flags);
    if (with_smiles) {
      auto* opt = sub.app->add_option("smiles", sub.smiles, "input SMILES");
      if (smiles_required) opt->required();
    }
  };

  make("parse", "parse a corpus and report per-molecule stats", false);
  make("descriptors", "compute the six reward signals per molecule", false);
  make("embed", "generate planted-signal embeddings + ground-truth ledger", false);
  make("sae-train", "train the sparse autoencoder on embeddings", false);
  make("sae-analyze", "sparsity, factor-reward correlations, reward prediction", false);
  make("probe", "train/evaluate per-motif probes and co-occurrence baseline", false);
  make("saliency", "integrated-gradients saliency for a sample or one SMILES", true);
  make("counterfactual", "saliency-guided counterfactual edits for one SMILES", true, true);
  make("analyze", "full pipeline with manifest", false);
  make("report", "summarize an analyze output directory", false);

  CLI11_PARSE(app, argc, argv);

  try {
    for (auto& [name, sub] : subs) {
      if (!sub.app->parsed()) continue;
      RunConfig cfg = build_config(sub.flags);
      using namespace molsight::cli;
      if (name == "parse") return cmd_parse(cfg);
      if (name == "descriptors") return cmd_descriptors(cfg);
      if (name == "embed") return cmd_embed(cfg);
      if (name == "sae-train") return cmd_sae_train(cfg);
      if (name == "sae-analyze") return cmd_sae_analyze(cfg);
      if (name == "probe") return cmd_probe(cfg);
      if (name == "saliency") return cmd_saliency(cfg, sub.smiles);
      if (name == "counterfactual") return cmd_counterfactual(cfg, sub.smiles);
      if (name == "analyze") return cmd_analyze(cfg);
      if (name == "report") return cmd_report(cfg);
    }
  } catch (const molsight::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
