//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "molsight/cli/commands.hpp"
#include "molsight/harness/corpus.hpp"
#include "molsight/io/checkpoint.hpp"
#include "molsight/io/config.hpp"
#include "molsight/io/csv.hpp"
#include "molsight/io/embedding_file.hpp"
#include "molsight/num/rng.hpp"
#include "molsight/sae/sae.hpp"

using namespace molsight;
namespace fs = std::filesystem;

namespace {

fs::path make_tmp_dir(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("molsight_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

std::string slurp(const fs::path& p) { return io::read_text_file(p.string()); }

io::RunConfig tiny_config(const fs::path& dir) {
  io::RunConfig cfg;
  cfg.output_dir = (dir / "out").string();
  cfg.master_seed = 7;
  cfg.harness_dim = 24;
  cfg.harness_corpus_size = 40;
  cfg.sae_factors = 12;
  cfg.sae_epochs = 4;
  cfg.sae_batch = 16;
  cfg.predictor_epochs = 5;
  cfg.predictor_hidden = 8;
  cfg.probe_epochs = 2;
  cfg.probe_batch = 32;
  cfg.surrogate_epochs = 4;
  cfg.ig_steps = 8;
  cfg.sample_molecules = 2;
  cfg.test_fraction = 0.25;
  return cfg;
}

std::string write_tiny_corpus(const fs::path& dir, int n) {
  auto smiles = harness::generate_corpus_smiles({n, 99ull, 3});
  std::string text;
  for (const auto& s : smiles) text += s + "\n";
  fs::path p = dir / "corpus.smi";
  write_file(p, text);
  return p.string();
}

}  // namespace

TEST_CASE("config file parsing, overrides and hashing") {
  fs::path dir = make_tmp_dir("config");
  write_file(dir / "run.ini",
             "[run]\n"
             "master_seed = 123\n"
             "threads = 2\n"
             "# comment\n"
             "[sae]\n"
             "l1 = 0.02\n"
             "epochs = 10\n"
             "[paths]\n"
             "output_dir = somewhere\n");
  io::RunConfig cfg = io::RunConfig::load_file((dir / "run.ini").string());
  CHECK(cfg.master_seed == 123);
  CHECK(cfg.threads == 2);
  CHECK(cfg.sae_l1 == doctest::Approx(0.02));
  CHECK(cfg.sae_epochs == 10);
  CHECK(cfg.output_dir == "somewhere");

  std::string h1 = cfg.config_hash();
  cfg.apply_override("sae.l1", "0.05");
  CHECK(cfg.sae_l1 == doctest::Approx(0.05));
  CHECK(cfg.config_hash() != h1);
  CHECK_THROWS_AS(cfg.apply_override("nope.key", "1"), Error);
  CHECK_THROWS_AS(cfg.apply_override("sae.epochs", "abc"), Error);

  io::RunConfig again = io::RunConfig::load_file((dir / "run.ini").string());
  CHECK(again.config_hash() == h1);  // deterministic hash
}

TEST_CASE("embedding file round trip: binary exact, csv fallback") {
  fs::path dir = make_tmp_dir("embed");
  num::Rng rng(5);
  Eigen::MatrixXd h(7, 5);
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 5; ++c) h(r, c) = rng.normal();

  std::string bin = (dir / "h.bin").string();
  io::write_embedding_file(bin, h);
  Eigen::MatrixXd back = io::read_embedding_file(bin);
  CHECK((back - h).cwiseAbs().maxCoeff() == 0.0);  // float64 payload, bit-exact

  std::string csv = (dir / "h.csv").string();
  std::string text = "h0,h1,h2,h3,h4\n";
  for (int r = 0; r < 7; ++r) {
    for (int c = 0; c < 5; ++c) text += (c ? "," : "") + io::fmt_double(h(r, c));
    text += "\n";
  }
  write_file(csv, text);
  Eigen::MatrixXd from_csv = io::read_embedding_file(csv);
  CHECK((from_csv - h).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(io::read_embedding_file((dir / "missing.bin").string()), Error);
}

TEST_CASE("checkpoints reload bit-exact") {
  fs::path dir = make_tmp_dir("ckpt");
  num::Rng rng(11);
  Eigen::MatrixXd h(30, 6);
  for (int r = 0; r < 30; ++r)
    for (int c = 0; c < 6; ++c) h(r, c) = rng.normal();
  sae::SaeConfig sc;
  sc.factors = 4;
  sc.epochs = 3;
  sc.batch_size = 8;
  sc.seed = 77;
  sae::SaeModel model = sae::train_sae(h, sc).model;

  std::string path = (dir / "sae.json").string();
  io::save_sae(path, model, {77, "deadbeef"});
  sae::SaeModel loaded = io::load_sae(path);
  CHECK((loaded.encoder_w - model.encoder_w).cwiseAbs().maxCoeff() == 0.0);
  CHECK((loaded.decoder_w - model.decoder_w).cwiseAbs().maxCoeff() == 0.0);
  CHECK((loaded.encoder_b - model.encoder_b).cwiseAbs().maxCoeff() == 0.0);
  CHECK(loaded.config.l1 == model.config.l1);

  harness::SurrogateConfig scfg;
  scfg.seed = 3;
  harness::SurrogateModel surr = harness::SurrogateModel::create(18, scfg);
  std::string spath = (dir / "surr.json").string();
  io::save_surrogate(spath, surr, {3, "beef"});
  harness::SurrogateModel sload = io::load_surrogate(spath);
  for (size_t l = 0; l < surr.atom_net().weights().size(); ++l)
    CHECK((sload.atom_net().weights()[l] - surr.atom_net().weights()[l])
              .cwiseAbs()
              .maxCoeff() == 0.0);
}

TEST_CASE("cmd_descriptors: sidecar, exit codes, determinism") {
  fs::path dir = make_tmp_dir("desc");
  write_file(dir / "corpus.smi", "CCO\tethanol\nC1CC\tbroken\nc1ccccc1\tbenzene\n");

  io::RunConfig cfg;
  cfg.corpus = (dir / "corpus.smi").string();
  cfg.output_dir = (dir / "out").string();
  CHECK(cli::cmd_descriptors(cfg) == 0);

  auto rows = io::read_csv(cfg.output_dir + "/descriptors.csv");
  // comment header skipped by read_csv? it keeps all lines; first is '#'
  int data_rows = 0;
  bool header_seen = false;
  for (const auto& r : rows) {
    if (!r.empty() && !r[0].empty() && r[0][0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      CHECK(r[0] == "name");
      continue;
    }
    ++data_rows;
  }
  CHECK(data_rows == 2);

  std::string sidecar = slurp(fs::path(cfg.output_dir) / "descriptors_errors.csv");
  CHECK(sidecar.find("2,") != std::string::npos);  // line 2 failed

  // determinism: byte-identical rerun
  std::string first = slurp(fs::path(cfg.output_dir) / "descriptors.csv");
  CHECK(cli::cmd_descriptors(cfg) == 0);
  CHECK(slurp(fs::path(cfg.output_dir) / "descriptors.csv") == first);

  // empty corpus -> exit 2
  write_file(dir / "empty.smi", "");
  io::RunConfig empty_cfg = cfg;
  empty_cfg.corpus = (dir / "empty.smi").string();
  CHECK(cli::cmd_descriptors(empty_cfg) == 2);

  // unreadable corpus -> exit 2
  io::RunConfig missing = cfg;
  missing.corpus = (dir / "missing.smi").string();
  CHECK(cli::cmd_descriptors(missing) == 2);
}

TEST_CASE("analyze pipeline: manifest, rerun identity, error recording") {
  fs::path dir = make_tmp_dir("analyze");
  io::RunConfig cfg = tiny_config(dir);
  cfg.corpus = write_tiny_corpus(dir, 40);

  REQUIRE(cli::cmd_analyze(cfg) == 0);
  nlohmann::json manifest =
      nlohmann::json::parse(slurp(fs::path(cfg.output_dir) / "manifest.json"));
  CHECK(manifest["config_hash"] == cfg.config_hash());
  int ok = 0;
  for (const auto& s : manifest["stages"]) {
    INFO(s.dump());
    CHECK(s["status"] == "ok");
    ++ok;
  }
  CHECK(ok == 7);
  CHECK(manifest["artifacts"].size() >= 7);

  // byte-identical rerun into a fresh directory
  io::RunConfig cfg2 = cfg;
  cfg2.output_dir = (dir / "out2").string();
  REQUIRE(cli::cmd_analyze(cfg2) == 0);
  for (const auto& entry : fs::directory_iterator(cfg.output_dir)) {
    fs::path other = fs::path(cfg2.output_dir) / entry.path().filename();
    CAPTURE(entry.path().filename().string());
    REQUIRE(fs::exists(other));
    if (entry.path().filename() == "manifest.json") continue;  // hashes equal anyway
    CHECK(slurp(entry.path()) == slurp(other));
  }
  nlohmann::json manifest2 =
      nlohmann::json::parse(slurp(fs::path(cfg2.output_dir) / "manifest.json"));
  CHECK(manifest2["config_hash"] == manifest["config_hash"]);

  // embeddings of the wrong width: stage error recorded, exit 1
  io::RunConfig bad = cfg;
  bad.output_dir = (dir / "out_bad").string();
  Eigen::MatrixXd wrong = Eigen::MatrixXd::Zero(40, cfg.harness_dim + 3);
  fs::create_directories(bad.output_dir);
  io::write_embedding_file((dir / "wrong.bin").string(), wrong);
  bad.embeddings = (dir / "wrong.bin").string();
  CHECK(cli::cmd_analyze(bad) == 1);
  nlohmann::json bad_manifest =
      nlohmann::json::parse(slurp(fs::path(bad.output_dir) / "manifest.json"));
  bool saw_shape_error = false;
  for (const auto& s : bad_manifest["stages"]) {
    if (s["name"] == "embeddings") {
      CHECK(s["status"] == "error");
      std::string msg = s["error"].get<std::string>();
      CHECK(msg.find("ShapeMismatch") != std::string::npos);
      saw_shape_error = true;
    }
  }
  CHECK(saw_shape_error);
}

TEST_CASE("cmd_counterfactual and cmd_saliency") {
  fs::path dir = make_tmp_dir("cf");
  io::RunConfig cfg = tiny_config(dir);
  cfg.corpus = write_tiny_corpus(dir, 40);
  REQUIRE(cli::cmd_analyze(cfg) == 0);  // produces surrogate.json

  io::RunConfig cf = cfg;
  cf.surrogate = cfg.output_dir + "/surrogate.json";
  CHECK(cli::cmd_counterfactual(cf, "Clc1ccccc1") == 0);
  std::string report = slurp(fs::path(cfg.output_dir) / "counterfactual_single.csv");
  CHECK(report.find("chloro_to_bromo") != std::string::npos);

  // methane: empty scan, still exit 0
  CHECK(cli::cmd_counterfactual(cf, "C") == 0);
  std::string empty_report = slurp(fs::path(cfg.output_dir) / "counterfactual_single.csv");
  int lines = 0;
  for (char c : empty_report)
    if (c == '\n') ++lines;
  CHECK(lines == 2);  // comment + column header only

  // parse failure -> exit 2
  CHECK(cli::cmd_counterfactual(cf, "C1CC") == 2);
  // missing checkpoint -> exit 2
  io::RunConfig no_model = cfg;
  no_model.output_dir = (dir / "nowhere").string();
  no_model.surrogate.clear();
  CHECK(cli::cmd_counterfactual(no_model, "CCO") == 2);

  CHECK(cli::cmd_saliency(cf, "Cc1ccccc1") == 0);
  std::string saliency = slurp(fs::path(cfg.output_dir) / "saliency.csv");
  CHECK(saliency.find("score") != std::string::npos);
}

TEST_CASE("stage subcommands compose like analyze") {
  fs::path dir = make_tmp_dir("stages");
  io::RunConfig cfg = tiny_config(dir);
  cfg.corpus = write_tiny_corpus(dir, 30);
  cfg.harness_corpus_size = 30;

  CHECK(cli::cmd_parse(cfg) == 0);
  CHECK(cli::cmd_descriptors(cfg) == 0);
  CHECK(cli::cmd_embed(cfg) == 0);
  CHECK(cli::cmd_sae_train(cfg) == 0);
  CHECK(cli::cmd_sae_analyze(cfg) == 0);
  CHECK(cli::cmd_probe(cfg) == 0);
  CHECK(fs::exists(fs::path(cfg.output_dir) / "sparsity.json"));
  CHECK(fs::exists(fs::path(cfg.output_dir) / "factor_correlations.csv"));
  CHECK(fs::exists(fs::path(cfg.output_dir) / "top_pairs.csv"));
  CHECK(fs::exists(fs::path(cfg.output_dir) / "reward_r2.csv"));
  CHECK(fs::exists(fs::path(cfg.output_dir) / "probe_report.csv"));
  CHECK(fs::exists(fs::path(cfg.output_dir) / "cooccurrence.csv"));
}

TEST_CASE("molsight binary end to end") {
  fs::path dir = make_tmp_dir("binary");
  std::string corpus = write_tiny_corpus(dir, 10);
  std::string out = (dir / "out").string();
  std::string cmd = std::string(MOLSIGHT_BIN) + " descriptors --corpus " + corpus +
                    " --output-dir " + out + " >/dev/null 2>&1";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(fs::exists(fs::path(out) / "descriptors.csv"));

  std::string bad = std::string(MOLSIGHT_BIN) + " descriptors --corpus " +
                    (dir / "missing.smi").string() + " --output-dir " + out +
                    " >/dev/null 2>&1";
  int rc = std::system(bad.c_str());
  CHECK(WEXITSTATUS(rc) == 2);
}
