//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <optional>

#include "molsight/attr/counterfactual.hpp"
#include "molsight/chem/perception.hpp"
#include "molsight/chem/sanitize.hpp"
#include "molsight/chem/smiles.hpp"
#include "molsight/chem/smiles_io.hpp"
#include "molsight/cli/commands.hpp"
#include "molsight/desc/descriptors.hpp"
#include "molsight/harness/corpus.hpp"
#include "molsight/harness/featurize.hpp"
#include "molsight/harness/planted.hpp"
#include "molsight/harness/surrogate.hpp"
#include "molsight/io/checkpoint.hpp"
#include "molsight/io/csv.hpp"
#include "molsight/io/embedding_file.hpp"
#include "molsight/probe/probe.hpp"
#include "molsight/sae/sae.hpp"

namespace molsight::cli {

namespace fs = std::filesystem;
using io::fmt_double;
using io::RunConfig;
using nlohmann::json;

namespace {

std::string out_path(const RunConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.output_dir);
  return (fs::path(cfg.output_dir) / name).string();
}

std::string artifact_header(const RunConfig& cfg) {
  return "# molsight " + std::string(kVersion) + " config=" + cfg.config_hash() +
         " seed=" + std::to_string(cfg.master_seed) + "\n";
}

struct LoadedCorpus {
  std::vector<chem::SmilesRecord> records;       // all parseable records
  std::vector<chem::Molecule> molecules;         // perceived, 1:1 with records
  std::vector<std::pair<int, std::string>> errors;  // (line, message)
  int input_lines = 0;
};

LoadedCorpus load_corpus(const std::string& path) {
  LoadedCorpus corpus;
  std::vector<chem::SmilesRecord> raw = chem::read_smiles_file(path);
  corpus.input_lines = static_cast<int>(raw.size());
  for (const chem::SmilesRecord& rec : raw) {
    try {
      chem::Molecule mol = chem::read_molecule(rec.smiles);
      chem::SanitizeResult ok = chem::sanitize(mol);
      if (!ok.ok()) {
        corpus.errors.push_back({rec.line, ok.message});
        continue;
      }
      corpus.records.push_back(rec);
      corpus.molecules.push_back(std::move(mol));
    } catch (const Error& e) {
      corpus.errors.push_back({rec.line, e.what()});
    }
  }
  return corpus;
}

void write_error_sidecar(const RunConfig& cfg, const std::string& name,
                         const LoadedCorpus& corpus) {
  std::string text = artifact_header(cfg);
  text += "line,error\n";
  for (const auto& [line, msg] : corpus.errors) {
    std::string clean = msg;
    for (char& c : clean)
      if (c == ',' || c == '\n') c = ';';
    text += std::to_string(line) + "," + clean + "\n";
  }
  io::write_text_file(out_path(cfg, name), text);
}

desc::DescriptorOptions descriptor_options(const RunConfig& cfg,
                                           std::optional<smarts::MotifLibrary>& alerts) {
  desc::DescriptorOptions opts;
  opts.tpsa_include_s_p = cfg.tpsa_include_s_p;
  opts.qed_weights =
      cfg.qed_weights == "unit" ? desc::QedWeights::Unit : desc::QedWeights::Mean;
  if (!cfg.alerts.empty()) {
    alerts = smarts::MotifLibrary::from_file(cfg.alerts);
    opts.alert_library = &*alerts;
  }
  return opts;
}

smarts::MotifLibrary load_motifs(const RunConfig& cfg) {
  if (!cfg.motifs.empty()) return smarts::MotifLibrary::from_file(cfg.motifs);
  return smarts::MotifLibrary::default_library();
}

std::vector<attr::TransformationRule> load_rules(const RunConfig& cfg) {
  if (!cfg.rules.empty()) return attr::rules_from_file(cfg.rules);
  return attr::default_rules();
}

Eigen::MatrixXd corpus_motif_labels(const std::vector<chem::Molecule>& mols,
                                    const smarts::MotifLibrary& lib) {
  Eigen::MatrixXd labels(static_cast<Eigen::Index>(mols.size()), lib.size());
  for (size_t i = 0; i < mols.size(); ++i) {
    std::vector<int> row = smarts::motif_labels(mols[i], lib);
    for (int m = 0; m < lib.size(); ++m)
      labels(static_cast<Eigen::Index>(i), m) = row[m];
  }
  return labels;
}

std::vector<std::string> motif_names(const smarts::MotifLibrary& lib) {
  std::vector<std::string> names;
  for (const auto& e : lib.entries()) names.push_back(e.name);
  return names;
}

std::vector<std::string> reward_names() {
  return {desc::kRewardSignalNames.begin(), desc::kRewardSignalNames.end()};
}

// ---- artifact emission helpers (all deterministic) ----

void write_descriptor_csv(const RunConfig& cfg, const std::string& name,
                          const LoadedCorpus& corpus,
                          const std::vector<desc::DescriptorRecord>& recs) {
  std::string text = artifact_header(cfg);
  text += "name,smiles,drug_likeness,complexity,lipophilicity,size,polarity,flexibility\n";
  for (size_t i = 0; i < recs.size(); ++i) {
    const desc::DescriptorRecord& r = recs[i];
    text += io::csv_join({corpus.records[i].name, corpus.records[i].smiles,
                          fmt_double(r.drug_likeness), fmt_double(r.complexity),
                          fmt_double(r.lipophilicity), fmt_double(r.size),
                          fmt_double(r.polarity), std::to_string(r.flexibility)}) +
            "\n";
  }
  io::write_text_file(out_path(cfg, name), text);
}

Eigen::MatrixXd rewards_from_records(const std::vector<desc::DescriptorRecord>& recs) {
  Eigen::MatrixXd rewards(static_cast<Eigen::Index>(recs.size()), 6);
  for (size_t i = 0; i < recs.size(); ++i)
    rewards.row(static_cast<Eigen::Index>(i)) =
        desc::record_to_signals(recs[i]).transpose();
  return rewards;
}

struct AnalysisContext {
  LoadedCorpus corpus;
  std::vector<desc::DescriptorRecord> descriptors;
  Eigen::MatrixXd rewards;       // N x 6
  Eigen::MatrixXd motif_matrix;  // N x M
  smarts::MotifLibrary motifs = smarts::MotifLibrary::default_library();
  std::optional<smarts::MotifLibrary> alerts;
  desc::DescriptorOptions desc_opts;
  Eigen::MatrixXd embeddings;
  std::optional<harness::GroundTruthLedger> ledger;
};

void compute_stage_descriptors(const RunConfig& cfg, AnalysisContext& ctx) {
  if (ctx.corpus.molecules.empty()) throw EmptyCorpus("no parseable molecules in corpus");
  ctx.descriptors.clear();
  for (const chem::Molecule& mol : ctx.corpus.molecules)
    ctx.descriptors.push_back(desc::compute_descriptors(mol, ctx.desc_opts));
  ctx.rewards = rewards_from_records(ctx.descriptors);
  write_descriptor_csv(cfg, "descriptors.csv", ctx.corpus, ctx.descriptors);
  write_error_sidecar(cfg, "descriptors_errors.csv", ctx.corpus);
}

void compute_stage_embeddings(const RunConfig& cfg, AnalysisContext& ctx) {
  ctx.motif_matrix = corpus_motif_labels(ctx.corpus.molecules, ctx.motifs);
  if (!cfg.embeddings.empty()) {
    ctx.embeddings = io::read_embedding_file(cfg.embeddings);
    if (ctx.embeddings.rows() != static_cast<Eigen::Index>(ctx.corpus.molecules.size()))
      throw ShapeMismatch("ShapeMismatch: embeddings rows " +
                          std::to_string(ctx.embeddings.rows()) + " != corpus size " +
                          std::to_string(ctx.corpus.molecules.size()));
    if (ctx.embeddings.cols() != cfg.harness_dim)
      throw ShapeMismatch("ShapeMismatch: embeddings width " +
                          std::to_string(ctx.embeddings.cols()) + " != configured dim " +
                          std::to_string(cfg.harness_dim));
    return;
  }
  harness::PlantedSpec spec = harness::PlantedSpec::default_spec();
  spec.dim = cfg.harness_dim;
  spec.noise_sigma = cfg.harness_sigma;
  spec.nonlinear_mix = cfg.harness_nonlinear;
  spec.seed = cfg.stage_seed("embed");
  harness::EmbeddingResult res = harness::generate_embeddings(
      ctx.rewards, reward_names(), ctx.motif_matrix, motif_names(ctx.motifs), spec);
  ctx.embeddings = std::move(res.h);
  ctx.ledger = std::move(res.ledger);

  io::write_embedding_file(out_path(cfg, "embeddings.bin"), ctx.embeddings);
  json meta = json::parse(ctx.ledger->to_json());
  meta["config_hash"] = cfg.config_hash();
  io::write_text_file(out_path(cfg, "ground_truth.json"), meta.dump(1) + "\n");
}

}  // namespace

// ----------------------------------------------------------------------------

int cmd_parse(const RunConfig& cfg) {
  if (cfg.corpus.empty()) {
    std::cerr << "parse: no corpus file configured\n";
    return 2;
  }
  LoadedCorpus corpus;
  try {
    corpus = load_corpus(cfg.corpus);
  } catch (const Error& e) {
    std::cerr << "parse: " << e.what() << "\n";
    return 2;
  }
  if (corpus.input_lines == 0) {
    std::cerr << "parse: corpus is empty\n";
    return 2;
  }

  std::string text = artifact_header(cfg);
  text += "name,smiles,atoms,bonds,rings,aromatic_atoms,fragments\n";
  for (size_t i = 0; i < corpus.molecules.size(); ++i) {
    const chem::Molecule& m = corpus.molecules[i];
    int arom = 0;
    for (const chem::Atom& a : m.atoms()) arom += a.aromatic ? 1 : 0;
    text += io::csv_join({corpus.records[i].name, corpus.records[i].smiles,
                          std::to_string(m.atom_count()), std::to_string(m.bond_count()),
                          std::to_string(static_cast<int>(m.rings().size())),
                          std::to_string(arom), std::to_string(m.fragment_count())}) +
            "\n";
  }
  io::write_text_file(out_path(cfg, "parse_report.csv"), text);
  write_error_sidecar(cfg, "parse_errors.csv", corpus);
  std::cout << "parsed " << corpus.molecules.size() << "/" << corpus.input_lines
            << " molecules (" << corpus.errors.size() << " errors)\n";
  return corpus.molecules.empty() ? 1 : 0;
}

int cmd_descriptors(const RunConfig& cfg) {
  if (cfg.corpus.empty()) {
    std::cerr << "descriptors: no corpus file configured\n";
    return 2;
  }
  LoadedCorpus corpus;
  try {
    corpus = load_corpus(cfg.corpus);
  } catch (const Error& e) {
    std::cerr << "descriptors: " << e.what() << "\n";
    return 2;
  }
  if (corpus.input_lines == 0) {
    std::cerr << "descriptors: corpus is empty\n";
    return 2;
  }

  std::optional<smarts::MotifLibrary> alerts;
  desc::DescriptorOptions opts = descriptor_options(cfg, alerts);
  std::vector<desc::DescriptorRecord> recs;
  for (const chem::Molecule& mol : corpus.molecules)
    recs.push_back(desc::compute_descriptors(mol, opts));

  write_descriptor_csv(cfg, "descriptors.csv", corpus, recs);
  write_error_sidecar(cfg, "descriptors_errors.csv", corpus);
  std::cout << "descriptors for " << recs.size() << " molecules, " << corpus.errors.size()
            << " parse errors\n";
  return recs.empty() ? 1 : 0;
}

int cmd_embed(const RunConfig& cfg) {
  AnalysisContext ctx;
  std::optional<smarts::MotifLibrary> alerts;
  try {
    ctx.desc_opts = descriptor_options(cfg, ctx.alerts);
    ctx.motifs = load_motifs(cfg);
    if (cfg.corpus.empty()) {
      // generate and persist a synthetic corpus
      harness::CorpusConfig cc;
      cc.size = cfg.harness_corpus_size;
      cc.seed = cfg.stage_seed("corpus");
      std::vector<std::string> smiles = harness::generate_corpus_smiles(cc);
      std::string text;
      for (const std::string& s : smiles) text += s + "\n";
      io::write_text_file(out_path(cfg, "corpus.smi"), text);
      RunConfig patched = cfg;
      patched.corpus = out_path(cfg, "corpus.smi");
      ctx.corpus = load_corpus(patched.corpus);
    } else {
      ctx.corpus = load_corpus(cfg.corpus);
    }
    if (ctx.corpus.molecules.empty()) {
      std::cerr << "embed: corpus has no valid molecules\n";
      return 2;
    }
    compute_stage_descriptors(cfg, ctx);
    RunConfig no_external = cfg;
    no_external.embeddings.clear();  // embed always generates
    compute_stage_embeddings(no_external, ctx);
  } catch (const Error& e) {
    std::cerr << "embed: " << e.what() << "\n";
    return 2;
  }
  std::cout << "embeddings " << ctx.embeddings.rows() << "x" << ctx.embeddings.cols()
            << " written\n";
  return 0;
}

namespace {

Eigen::MatrixXd load_embeddings_for(const RunConfig& cfg) {
  std::string path = cfg.embeddings;
  if (path.empty()) path = out_path(cfg, "embeddings.bin");
  return io::read_embedding_file(path);
}

sae::SaeConfig sae_config(const RunConfig& cfg) {
  sae::SaeConfig sc;
  sc.factors = cfg.sae_factors;
  sc.l1 = cfg.sae_l1;
  sc.epochs = cfg.sae_epochs;
  sc.batch_size = cfg.sae_batch;
  sc.learning_rate = cfg.sae_lr;
  sc.dropout = cfg.sae_dropout;
  sc.seed = cfg.stage_seed("sae");
  sc.kl_sparsity_aux = cfg.sae_kl_aux;
  sc.target_sparsity = cfg.sae_target_sparsity;
  sc.kl_weight = cfg.sae_kl_weight;
  return sc;
}

void run_sae_train(const RunConfig& cfg, const Eigen::MatrixXd& h) {
  sae::SaeTrainResult res = sae::train_sae(h, sae_config(cfg));
  io::CheckpointMeta meta{cfg.stage_seed("sae"), cfg.config_hash()};
  io::save_sae(out_path(cfg, "sae_model.json"), res.model, meta);

  std::string curve = artifact_header(cfg);
  curve += "epoch,loss\n";
  for (size_t e = 0; e < res.epoch_loss.size(); ++e)
    curve += std::to_string(e + 1) + "," + fmt_double(res.epoch_loss[e]) + "\n";
  io::write_text_file(out_path(cfg, "sae_loss.csv"), curve);
}

void run_sae_analyze(const RunConfig& cfg, const sae::SaeModel& model,
                     const Eigen::MatrixXd& h, const Eigen::MatrixXd& rewards) {
  Eigen::MatrixXd z = sae::encode(model, h);

  sae::SparsityReport sparsity = sae::sparsity_report(z, 0.1);
  json sj;
  sj["config_hash"] = cfg.config_hash();
  sj["threshold"] = sparsity.threshold;
  sj["mean"] = sparsity.mean;
  sj["std"] = sparsity.stddev;
  sj["min"] = sparsity.min;
  sj["max"] = sparsity.max;
  sj["kl_sparsity_aux"] = cfg.sae_kl_aux;  // flags the auxiliary-penalty reading
  sj["activation_frequency"] = std::vector<double>(
      sparsity.activation_frequency.data(),
      sparsity.activation_frequency.data() + sparsity.activation_frequency.size());
  io::write_text_file(out_path(cfg, "sparsity.json"), sj.dump(1) + "\n");

  sae::CorrelationResult corr =
      sae::factor_reward_correlations(z, rewards, cfg.sae_top_pairs);
  std::vector<std::string> signals = reward_names();
  std::string cm = artifact_header(cfg);
  cm += "factor";
  for (const std::string& s : signals) cm += "," + s;
  cm += "\n";
  for (Eigen::Index f = 0; f < corr.r.rows(); ++f) {
    cm += "factor_" + std::to_string(f);
    for (Eigen::Index s = 0; s < corr.r.cols(); ++s) cm += "," + fmt_double(corr.r(f, s));
    cm += "\n";
  }
  io::write_text_file(out_path(cfg, "factor_correlations.csv"), cm);

  std::string tp = artifact_header(cfg);
  tp += "factor,signal,r\n";
  for (const sae::TopPair& pair : corr.top_pairs)
    tp += "factor_" + std::to_string(pair.factor) + "," + signals[pair.signal] + "," +
          fmt_double(pair.r) + "\n";
  io::write_text_file(out_path(cfg, "top_pairs.csv"), tp);

  sae::RewardPredictorConfig pc;
  pc.kind = cfg.predictor_kind == "linear" ? sae::RewardPredictorConfig::Kind::Linear
                                           : sae::RewardPredictorConfig::Kind::Mlp;
  pc.hidden = cfg.predictor_hidden;
  pc.epochs = cfg.predictor_epochs;
  pc.batch_size = cfg.predictor_batch;
  pc.learning_rate = cfg.predictor_lr;
  pc.dropout = cfg.predictor_dropout;
  pc.seed = cfg.stage_seed("predictor");
  num::Split split = num::split_indices(static_cast<int>(h.rows()), cfg.test_fraction,
                                        cfg.stage_seed("split"));
  std::vector<sae::SignalPredictionScore> scores =
      sae::train_reward_predictor(z, rewards, signals, split, pc);
  std::string rr = artifact_header(cfg);
  rr += "signal,train_r2,test_r2\n";
  for (const sae::SignalPredictionScore& s : scores)
    rr += s.signal + "," + fmt_double(s.train_r2) + "," + fmt_double(s.test_r2) + "\n";
  io::write_text_file(out_path(cfg, "reward_r2.csv"), rr);
}

void run_probe_stage(const RunConfig& cfg, const Eigen::MatrixXd& h,
                     const Eigen::MatrixXd& labels, const smarts::MotifLibrary& lib) {
  probe::ProbeConfig pc;
  pc.epochs = cfg.probe_epochs;
  pc.batch_size = cfg.probe_batch;
  pc.learning_rate = cfg.probe_lr;
  pc.dropout = cfg.probe_dropout;
  pc.seed = cfg.stage_seed("probe");
  pc.balancing = cfg.probe_balancing == "weight" ? probe::ProbeConfig::Balancing::PosWeight
                                                 : probe::ProbeConfig::Balancing::Oversample;
  pc.threads = cfg.threads;

  num::Split split = num::split_indices(static_cast<int>(h.rows()), cfg.test_fraction,
                                        cfg.stage_seed("split"));
  probe::ProbeSuiteResult suite = probe::probe_suite(h, labels, motif_names(lib), split, pc);

  std::string pr = artifact_header(cfg);
  pr += "motif,prevalence,auroc,ap,train_size,test_size,epochs,skipped,reason\n";
  for (const probe::ProbeReportRow& row : suite.rows) {
    std::string reason = row.skip_reason;
    for (char& c : reason)
      if (c == ',' || c == '\n') c = ';';
    pr += io::csv_join({row.motif, fmt_double(row.prevalence),
                        row.auroc ? fmt_double(*row.auroc) : "",
                        row.skipped ? "" : fmt_double(row.average_precision),
                        std::to_string(row.train_size), std::to_string(row.test_size),
                        std::to_string(row.epochs), row.skipped ? "1" : "0", reason}) +
          "\n";
  }
  io::write_text_file(out_path(cfg, "probe_report.csv"), pr);

  json sj;
  sj["config_hash"] = cfg.config_hash();
  sj["mean_auroc"] = suite.mean_auroc;
  sj["evaluated"] = suite.evaluated;
  sj["total"] = static_cast<int>(suite.rows.size());
  json skipped = json::array();
  for (const probe::ProbeReportRow& row : suite.rows)
    if (row.skipped) skipped.push_back({{"motif", row.motif}, {"reason", row.skip_reason}});
  sj["skipped"] = std::move(skipped);
  io::write_text_file(out_path(cfg, "probe_summary.json"), sj.dump(1) + "\n");

  std::vector<int> constant_cols;
  Eigen::MatrixXd cooc = probe::motif_cooccurrence_correlation(labels, &constant_cols);
  std::string cc = artifact_header(cfg);
  cc += "motif";
  for (const auto& e : lib.entries()) cc += "," + e.name;
  cc += "\n";
  for (Eigen::Index i = 0; i < cooc.rows(); ++i) {
    cc += lib.entry(static_cast<int>(i)).name;
    for (Eigen::Index j = 0; j < cooc.cols(); ++j) cc += "," + fmt_double(cooc(i, j));
    cc += "\n";
  }
  io::write_text_file(out_path(cfg, "cooccurrence.csv"), cc);
}

struct SaliencyArtifacts {
  std::string csv;
  json detail = json::array();
  std::string counterfactual_csv;
};

void saliency_for_molecule(const RunConfig& cfg, const AnalysisContext& ctx,
                           const harness::SurrogateModel& surrogate, int index,
                           const std::string& name, const chem::Molecule& mol,
                           const std::vector<attr::TransformationRule>& rules,
                           SaliencyArtifacts& out) {
  Eigen::MatrixXd x = harness::featurize_atoms(mol);
  Eigen::MatrixXd baseline = Eigen::MatrixXd::Zero(x.rows(), x.cols());
  attr::BaselineKind kind = attr::BaselineKind::Zero;
  if (cfg.ig_baseline == "mean") {
    kind = attr::BaselineKind::Mean;
    // mean feature vector over the run's corpus
    Eigen::RowVectorXd mean = Eigen::RowVectorXd::Zero(x.cols());
    long total = 0;
    for (const chem::Molecule& m : ctx.corpus.molecules) {
      Eigen::MatrixXd f = harness::featurize_atoms(m);
      mean += f.colwise().sum();
      total += f.rows();
    }
    if (total > 0) mean /= static_cast<double>(total);
    baseline = mean.replicate(x.rows(), 1);
  }

  attr::AttributionMap map =
      attr::integrated_gradients(surrogate, x, baseline, cfg.ig_steps, kind);
  Eigen::VectorXd scores = attr::atom_scores(map);
  std::vector<attr::MotifCandidate> motifs = attr::extract_motifs(
      mol, scores, cfg.ig_percentile, cfg.ig_top_k, cfg.ig_ring_boost);

  std::vector<int> motif_of_atom(mol.atom_count(), -1);
  for (size_t mi = 0; mi < motifs.size(); ++mi)
    for (int a : motifs[mi].atoms) motif_of_atom[a] = static_cast<int>(mi);

  std::string smiles = chem::write_smiles(mol);
  for (int a = 0; a < mol.atom_count(); ++a) {
    out.csv += io::csv_join({std::to_string(index), name, smiles, std::to_string(a),
                             std::string(chem::symbol(mol.atom(a).element)),
                             fmt_double(scores[a]), std::to_string(motif_of_atom[a])}) +
               "\n";
  }

  json detail;
  detail["index"] = index;
  detail["name"] = name;
  detail["smiles"] = smiles;
  detail["completeness_residual"] = map.completeness_residual;
  detail["value"] = map.value;
  detail["baseline_value"] = map.baseline_value;
  detail["steps"] = map.steps;
  detail["baseline"] = cfg.ig_baseline;
  json jm = json::array();
  for (const attr::MotifCandidate& m : motifs) {
    jm.push_back({{"atoms", m.atoms},
                  {"score", m.score},
                  {"origin", m.origin == attr::MotifCandidate::Origin::Ring ? "ring"
                                                                            : "component"}});
  }
  detail["motifs"] = std::move(jm);
  out.detail.push_back(std::move(detail));

  attr::ScanResult scan = attr::counterfactual_scan(mol, motifs, rules, ctx.desc_opts);
  for (size_t ri = 0; ri < scan.results.size(); ++ri) {
    const attr::CounterfactualResult& r = scan.results[ri];
    std::string site;
    for (size_t si = 0; si < r.site.size(); ++si) {
      if (si) site += ' ';
      site += std::to_string(r.site[si]);
    }
    bool best = scan.best_per_motif[r.motif_index] &&
                *scan.best_per_motif[r.motif_index] == static_cast<int>(ri);
    out.counterfactual_csv +=
        io::csv_join({std::to_string(index), name, smiles,
                      std::to_string(r.motif_index), r.rule, site, r.product_smiles,
                      fmt_double(r.qed_before), fmt_double(r.qed_after),
                      fmt_double(r.delta_qed), r.valid ? "1" : "0", best ? "1" : "0"}) +
        "\n";
  }
}

std::string saliency_csv_header(const RunConfig& cfg) {
  return artifact_header(cfg) +
         "molecule,name,smiles,atom,element,score,selected_motif\n";
}

std::string counterfactual_csv_header(const RunConfig& cfg) {
  return artifact_header(cfg) +
         "molecule,name,input_smiles,motif,rule,site,product_smiles,qed_before,qed_after,"
         "delta_qed,valid,best\n";
}

}  // namespace

int cmd_sae_train(const RunConfig& cfg) {
  try {
    Eigen::MatrixXd h = load_embeddings_for(cfg);
    run_sae_train(cfg, h);
  } catch (const Error& e) {
    std::cerr << "sae-train: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int cmd_sae_analyze(const RunConfig& cfg) {
  try {
    Eigen::MatrixXd h = load_embeddings_for(cfg);
    sae::SaeModel model = io::load_sae(out_path(cfg, "sae_model.json"));
    Eigen::MatrixXd rewards;
    if (!cfg.descriptors_csv.empty()) {
      auto rows = io::read_csv(cfg.descriptors_csv);
      if (rows.size() < 2) throw Error("descriptor CSV has no data rows");
      rewards.resize(static_cast<Eigen::Index>(rows.size() - 1), 6);
      for (size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() < 8) throw Error("descriptor CSV row too short");
        for (int c = 0; c < 6; ++c)
          rewards(static_cast<Eigen::Index>(r - 1), c) = std::stod(rows[r][2 + c]);
      }
    } else {
      if (cfg.corpus.empty()) throw Error("need a corpus or descriptors_csv for rewards");
      LoadedCorpus corpus = load_corpus(cfg.corpus);
      std::optional<smarts::MotifLibrary> alerts;
      desc::DescriptorOptions opts = descriptor_options(cfg, alerts);
      std::vector<desc::DescriptorRecord> recs;
      for (const chem::Molecule& mol : corpus.molecules)
        recs.push_back(desc::compute_descriptors(mol, opts));
      rewards = rewards_from_records(recs);
    }
    if (rewards.rows() != h.rows())
      throw ShapeMismatch("rewards rows != embedding rows");
    run_sae_analyze(cfg, model, h, rewards);
  } catch (const Error& e) {
    std::cerr << "sae-analyze: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int cmd_probe(const RunConfig& cfg) {
  try {
    if (cfg.corpus.empty()) throw Error("probe needs a corpus for motif labels");
    Eigen::MatrixXd h = load_embeddings_for(cfg);
    LoadedCorpus corpus = load_corpus(cfg.corpus);
    smarts::MotifLibrary lib = load_motifs(cfg);
    Eigen::MatrixXd labels = corpus_motif_labels(corpus.molecules, lib);
    if (labels.rows() != h.rows())
      throw ShapeMismatch("label rows != embedding rows");
    run_probe_stage(cfg, h, labels, lib);
  } catch (const Error& e) {
    std::cerr << "probe: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int cmd_saliency(const RunConfig& cfg, const std::string& smiles) {
  try {
    harness::SurrogateModel surrogate = io::load_surrogate(
        cfg.surrogate.empty() ? out_path(cfg, "surrogate.json") : cfg.surrogate);
    AnalysisContext ctx;
    ctx.desc_opts = descriptor_options(cfg, ctx.alerts);
    std::vector<attr::TransformationRule> rules = load_rules(cfg);

    SaliencyArtifacts art;
    art.csv = saliency_csv_header(cfg);
    art.counterfactual_csv = counterfactual_csv_header(cfg);

    if (!smiles.empty()) {
      chem::Molecule mol = chem::read_molecule(smiles);
      saliency_for_molecule(cfg, ctx, surrogate, 0, "", mol, rules, art);
    } else {
      if (cfg.corpus.empty()) throw Error("saliency needs a corpus or a SMILES argument");
      ctx.corpus = load_corpus(cfg.corpus);
      int n = std::min<int>(cfg.sample_molecules,
                            static_cast<int>(ctx.corpus.molecules.size()));
      for (int i = 0; i < n; ++i)
        saliency_for_molecule(cfg, ctx, surrogate, i, ctx.corpus.records[i].name,
                              ctx.corpus.molecules[i], rules, art);
    }
    io::write_text_file(out_path(cfg, "saliency.csv"), art.csv);
    json sj;
    sj["config_hash"] = cfg.config_hash();
    sj["molecules"] = std::move(art.detail);
    io::write_text_file(out_path(cfg, "saliency.json"), sj.dump(1) + "\n");
  } catch (const ParseError& e) {
    std::cerr << "saliency: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "saliency: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int cmd_counterfactual(const RunConfig& cfg, const std::string& smiles) {
  chem::Molecule mol;
  try {
    mol = chem::read_molecule(smiles);
  } catch (const Error& e) {
    std::cerr << "counterfactual: cannot parse SMILES: " << e.what() << "\n";
    return 2;
  }
  try {
    harness::SurrogateModel surrogate = io::load_surrogate(
        cfg.surrogate.empty() ? out_path(cfg, "surrogate.json") : cfg.surrogate);
    AnalysisContext ctx;
    ctx.desc_opts = descriptor_options(cfg, ctx.alerts);
    std::vector<attr::TransformationRule> rules = load_rules(cfg);

    SaliencyArtifacts art;
    art.csv = saliency_csv_header(cfg);
    art.counterfactual_csv = counterfactual_csv_header(cfg);
    saliency_for_molecule(cfg, ctx, surrogate, 0, "", mol, rules, art);

    io::write_text_file(out_path(cfg, "counterfactual_single.csv"), art.counterfactual_csv);
    io::write_text_file(out_path(cfg, "saliency_single.csv"), art.csv);
    std::cout << art.counterfactual_csv;
  } catch (const Error& e) {
    std::cerr << "counterfactual: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int cmd_analyze(const RunConfig& cfg) {
  json manifest;
  manifest["schema"] = "molsight-manifest";
  manifest["version"] = 1;
  manifest["molsight_version"] = std::string(kVersion);
  manifest["table_versions"] = {std::string(desc::kTpsaTableVersion),
                                std::string(desc::kCrippenTableVersion)};
  manifest["config_hash"] = cfg.config_hash();
  manifest["master_seed"] = cfg.master_seed;
  manifest["threads"] = cfg.threads;
  json stages = json::array();
  bool any_failed = false;
  bool all_failed = true;

  AnalysisContext ctx;
  harness::SurrogateModel surrogate;
  bool surrogate_ready = false;
  sae::SaeModel sae_model;
  bool sae_ready = false;

  auto stage = [&](const std::string& name, const std::vector<std::string>& artifacts,
                   const std::function<void()>& body) {
    json s;
    s["name"] = name;
    try {
      body();
      s["status"] = "ok";
      s["artifacts"] = artifacts;
      all_failed = false;
    } catch (const Error& e) {
      s["status"] = "error";
      s["error"] = e.what();
      any_failed = true;
    }
    stages.push_back(std::move(s));
  };

  // input validation first: unreadable/empty corpus is an input error
  if (cfg.corpus.empty()) {
    std::cerr << "analyze: no corpus file configured\n";
    return 2;
  }
  try {
    ctx.corpus = load_corpus(cfg.corpus);
  } catch (const Error& e) {
    std::cerr << "analyze: " << e.what() << "\n";
    return 2;
  }
  if (ctx.corpus.input_lines == 0) {
    std::cerr << "analyze: corpus is empty\n";
    return 2;
  }

  stage("descriptors", {"descriptors.csv", "descriptors_errors.csv"}, [&] {
    ctx.desc_opts = descriptor_options(cfg, ctx.alerts);
    ctx.motifs = load_motifs(cfg);
    compute_stage_descriptors(cfg, ctx);
  });

  stage("embeddings", {"embeddings.bin", "ground_truth.json"},
        [&] { compute_stage_embeddings(cfg, ctx); });

  stage("surrogate", {"surrogate.json", "surrogate_fit.json"}, [&] {
    std::vector<Eigen::MatrixXd> feats;
    Eigen::VectorXd targets(static_cast<Eigen::Index>(ctx.corpus.molecules.size()));
    for (size_t i = 0; i < ctx.corpus.molecules.size(); ++i) {
      feats.push_back(harness::featurize_atoms(ctx.corpus.molecules[i]));
      targets[static_cast<Eigen::Index>(i)] = ctx.descriptors[i].drug_likeness;
    }
    harness::SurrogateConfig sc;
    sc.epochs = cfg.surrogate_epochs;
    sc.batch_molecules = cfg.surrogate_batch;
    sc.learning_rate = cfg.surrogate_lr;
    sc.test_fraction = cfg.test_fraction;
    sc.seed = cfg.stage_seed("surrogate");
    surrogate = harness::SurrogateModel::create(harness::kAtomFeatureWidth, sc);
    harness::SurrogateFit fit = harness::train_surrogate(surrogate, feats, targets, sc);
    surrogate_ready = true;
    io::CheckpointMeta meta{sc.seed, cfg.config_hash()};
    io::save_surrogate(out_path(cfg, "surrogate.json"), surrogate, meta);
    json fj;
    fj["config_hash"] = cfg.config_hash();
    fj["train_r2"] = fit.train_r2;
    fj["test_r2"] = fit.test_r2;
    fj["test_mse"] = fit.test_mse;
    fj["epochs"] = cfg.surrogate_epochs;
    io::write_text_file(out_path(cfg, "surrogate_fit.json"), fj.dump(1) + "\n");
  });

  stage("sae-train", {"sae_model.json", "sae_loss.csv"}, [&] {
    if (ctx.embeddings.rows() == 0) throw Error("embeddings stage did not run");
    run_sae_train(cfg, ctx.embeddings);
    sae_model = io::load_sae(out_path(cfg, "sae_model.json"));
    sae_ready = true;
  });

  stage("sae-analyze",
        {"sparsity.json", "factor_correlations.csv", "top_pairs.csv", "reward_r2.csv"}, [&] {
          if (!sae_ready) throw Error("sae-train stage did not run");
          run_sae_analyze(cfg, sae_model, ctx.embeddings, ctx.rewards);
        });

  stage("probe", {"probe_report.csv", "probe_summary.json", "cooccurrence.csv"}, [&] {
    if (ctx.embeddings.rows() == 0) throw Error("embeddings stage did not run");
    run_probe_stage(cfg, ctx.embeddings, ctx.motif_matrix, ctx.motifs);
  });

  stage("saliency", {"saliency.csv", "saliency.json", "counterfactuals.csv"}, [&] {
    if (!surrogate_ready) throw Error("surrogate stage did not run");
    std::vector<attr::TransformationRule> rules = load_rules(cfg);
    SaliencyArtifacts art;
    art.csv = saliency_csv_header(cfg);
    art.counterfactual_csv = counterfactual_csv_header(cfg);
    int n = std::min<int>(cfg.sample_molecules,
                          static_cast<int>(ctx.corpus.molecules.size()));
    for (int i = 0; i < n; ++i)
      saliency_for_molecule(cfg, ctx, surrogate, i, ctx.corpus.records[i].name,
                            ctx.corpus.molecules[i], rules, art);
    io::write_text_file(out_path(cfg, "saliency.csv"), art.csv);
    json sj;
    sj["config_hash"] = cfg.config_hash();
    sj["molecules"] = std::move(art.detail);
    io::write_text_file(out_path(cfg, "saliency.json"), sj.dump(1) + "\n");
    io::write_text_file(out_path(cfg, "counterfactuals.csv"), art.counterfactual_csv);
  });

  manifest["stages"] = std::move(stages);
  json artifacts = json::array();
  for (const auto& entry : fs::directory_iterator(cfg.output_dir)) {
    if (entry.is_regular_file() && entry.path().filename() != "manifest.json")
      artifacts.push_back(entry.path().filename().string());
  }
  std::vector<std::string> names = artifacts.get<std::vector<std::string>>();
  std::sort(names.begin(), names.end());
  manifest["artifacts"] = names;
  manifest["input_lines"] = ctx.corpus.input_lines;
  manifest["molecules"] = static_cast<int>(ctx.corpus.molecules.size());
  manifest["parse_errors"] = static_cast<int>(ctx.corpus.errors.size());
  io::write_text_file(out_path(cfg, "manifest.json"), manifest.dump(1) + "\n");

  if (all_failed) return 1;
  return any_failed ? 1 : 0;
}

int cmd_report(const RunConfig& cfg) {
  std::string manifest_path = out_path(cfg, "manifest.json");
  json manifest;
  try {
    manifest = json::parse(io::read_text_file(manifest_path));
  } catch (const std::exception&) {
    std::cerr << "report: no readable manifest at " << manifest_path << "\n";
    return 2;
  }
  std::cout << "molsight report bundle: " << cfg.output_dir << "\n";
  std::cout << "config hash " << manifest.value("config_hash", "?") << ", seed "
            << manifest.value("master_seed", 0ull) << "\n";
  for (const auto& s : manifest["stages"]) {
    std::cout << "  " << s.value("name", "?") << ": " << s.value("status", "?");
    if (s.contains("error")) std::cout << " (" << s["error"].get<std::string>() << ")";
    std::cout << "\n";
  }
  auto print_file = [&](const std::string& name, int head) {
    fs::path p = fs::path(cfg.output_dir) / name;
    if (!fs::exists(p)) return;
    std::cout << "-- " << name << " --\n";
    std::istringstream ss(io::read_text_file(p.string()));
    std::string line;
    int shown = 0;
    while (std::getline(ss, line) && shown < head) {
      if (!line.empty() && line[0] == '#') continue;
      std::cout << "  " << line << "\n";
      ++shown;
    }
  };
  print_file("reward_r2.csv", 8);
  print_file("top_pairs.csv", 11);
  print_file("probe_report.csv", 12);
  return 0;
}

}  // namespace molsight::cli
