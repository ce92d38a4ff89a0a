//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <doctest.h>

#include <sstream>

#include "molsight/chem/perception.hpp"
#include "molsight/num/metrics.hpp"
#include "molsight/probe/probe.hpp"
#include "molsight/smarts/motifs.hpp"

using namespace molsight;
using namespace molsight::probe;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

MatrixXd gaussian(int n, int d, std::uint64_t seed) {
  num::Rng rng(seed);
  MatrixXd h(n, d);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < d; ++c) h(r, c) = rng.normal();
  return h;
}

ProbeConfig fast_config(std::uint64_t seed) {
  ProbeConfig cfg;
  cfg.hidden = {32, 16};
  cfg.epochs = 60;
  cfg.learning_rate = 5e-3;  // small synthetic sets need a faster schedule
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("linearly separable labels reach AUROC >= 0.99") {
  MatrixXd h = gaussian(600, 16, 42);
  VectorXd labels(600);
  for (int i = 0; i < 600; ++i) labels[i] = h(i, 3) > 0 ? 1.0 : 0.0;
  num::Split split = num::split_indices(600, 0.25, 7);

  ProbeConfig cfg = fast_config(1);
  cfg.epochs = 100;
  ProbeModel model = train_probe(h, labels, split.train, cfg, "separable");
  ProbeReportRow row = evaluate_probe(model, num::take_rows(h, split.test),
                                      num::take_elems(labels, split.test));
  REQUIRE(row.auroc.has_value());
  CHECK(*row.auroc >= 0.99);
}

TEST_CASE("random labels stay near chance, seed-averaged") {
  MatrixXd h = gaussian(300, 12, 11);
  num::Split split = num::split_indices(300, 0.3, 5);
  double total = 0;
  int seeds = 5;
  for (int s = 0; s < seeds; ++s) {
    num::Rng label_rng(1000 + s);
    VectorXd labels(300);
    for (int i = 0; i < 300; ++i) labels[i] = label_rng.next_double() < 0.5 ? 1.0 : 0.0;
    ProbeModel model = train_probe(h, labels, split.train, fast_config(s), "random");
    ProbeReportRow row = evaluate_probe(model, num::take_rows(h, split.test),
                                        num::take_elems(labels, split.test));
    REQUIRE(row.auroc.has_value());
    total += *row.auroc;
  }
  double mean = total / seeds;
  CHECK(mean >= 0.4);
  CHECK(mean <= 0.6);
}

TEST_CASE("single-class training split throws") {
  MatrixXd h = gaussian(50, 4, 3);
  VectorXd labels = VectorXd::Zero(50);
  num::Split split = num::split_indices(50, 0.2, 3);
  CHECK_THROWS_AS(train_probe(h, labels, split.train, fast_config(1), "allzero"),
                  SingleClass);
}

TEST_CASE("probe_suite on planted signals") {
  const int n = 300, d = 16;
  MatrixXd h = gaussian(n, d, 77);
  MatrixXd labels(n, 3);
  for (int i = 0; i < n; ++i) {
    labels(i, 0) = h(i, 0) + 0.1 * h(i, 1) > 0 ? 1.0 : 0.0;  // decodable
    labels(i, 1) = 0.0;                                      // constant -> skipped
  }
  num::Rng rng(5);
  for (int i = 0; i < n; ++i) labels(i, 2) = rng.next_double() < 0.3 ? 1.0 : 0.0;

  num::Split split = num::split_indices(n, 0.25, 13);
  ProbeSuiteResult res =
      probe_suite(h, labels, {"planted", "empty", "coin"}, split, fast_config(2));
  REQUIRE(res.rows.size() == 3);
  CHECK(res.rows[0].auroc.value() >= 0.9);
  CHECK(res.rows[1].skipped);
  CHECK(res.rows[1].skip_reason == "single-class training labels");
  CHECK_FALSE(res.rows[2].skipped);
  CHECK(res.evaluated == 2);

  // library of one motif with perfect signal
  MatrixXd one = labels.col(0);
  ProbeSuiteResult single = probe_suite(h, one, {"planted"}, split, fast_config(2));
  REQUIRE(single.rows.size() == 1);
  CHECK(single.rows[0].auroc.value() >= 0.9);
}

TEST_CASE("probe determinism: identical seed, identical report") {
  MatrixXd h = gaussian(200, 8, 21);
  VectorXd labels(200);
  for (int i = 0; i < 200; ++i) labels[i] = h(i, 2) > 0.3 ? 1.0 : 0.0;
  num::Split split = num::split_indices(200, 0.2, 9);

  auto render = [&] {
    ProbeModel model = train_probe(h, labels, split.train, fast_config(33), "det");
    ProbeReportRow row = evaluate_probe(model, num::take_rows(h, split.test),
                                        num::take_elems(labels, split.test));
    std::ostringstream os;
    os.precision(17);
    os << *row.auroc << "|" << row.average_precision << "|" << row.scaler_hash;
    return os.str();
  };
  CHECK(render() == render());
}

TEST_CASE("parallel probe suite matches sequential") {
  MatrixXd h = gaussian(150, 8, 55);
  MatrixXd labels(150, 3);
  for (int i = 0; i < 150; ++i) {
    labels(i, 0) = h(i, 0) > 0;
    labels(i, 1) = h(i, 1) > 0.5;
    labels(i, 2) = h(i, 2) < -0.2;
  }
  num::Split split = num::split_indices(150, 0.2, 3);
  ProbeConfig seq = fast_config(4);
  ProbeConfig par = fast_config(4);
  par.threads = 2;
  ProbeSuiteResult a = probe_suite(h, labels, {"a", "b", "c"}, split, seq);
  ProbeSuiteResult b = probe_suite(h, labels, {"a", "b", "c"}, split, par);
  REQUIRE(a.rows.size() == b.rows.size());
  for (size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].auroc.value() == b.rows[i].auroc.value());  // bitwise
    CHECK(a.rows[i].average_precision == b.rows[i].average_precision);
  }
}

TEST_CASE("motif co-occurrence correlation") {
  using chem::read_molecule;
  smarts::MotifLibrary lib = smarts::MotifLibrary::default_library();
  std::vector<chem::Molecule> corpus;
  for (const char* smi : {"c1ccccc1", "CCO", "Clc1ccccc1", "CC#N"})
    corpus.push_back(read_molecule(smi));

  MatrixXd labels(4, lib.size());
  for (int i = 0; i < 4; ++i) {
    auto row = smarts::motif_labels(corpus[i], lib);
    for (int m = 0; m < lib.size(); ++m) labels(i, m) = row[m];
  }
  std::vector<int> constant;
  MatrixXd r = probe::motif_cooccurrence_correlation(labels, &constant);

  int phenyl = lib.index_of("phenyl");
  int benzene = lib.index_of("benzene");
  int aromatic = lib.index_of("aromatic_ring");
  int cl = lib.index_of("halogen_Cl");
  CHECK(r(phenyl, benzene) == doctest::Approx(1.0));  // identical label columns
  // hand-computed over the 4 binary pairs: r = 1/sqrt(3)
  CHECK(r(aromatic, cl) == doctest::Approx(0.5773502691896258).epsilon(1e-12));
  CHECK((r - r.transpose()).norm() == doctest::Approx(0.0));

  // a motif and its complement correlate at -1
  MatrixXd two(4, 2);
  two << 1, 0, 0, 1, 1, 0, 0, 1;
  MatrixXd rc = probe::motif_cooccurrence_correlation(two);
  CHECK(rc(0, 1) == doctest::Approx(-1.0));
}
