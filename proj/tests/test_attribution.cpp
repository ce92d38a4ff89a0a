//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <doctest.h>

#include <cmath>

#include "molsight/attr/counterfactual.hpp"
#include "molsight/chem/isomorphism.hpp"
#include "molsight/chem/perception.hpp"
#include "molsight/chem/sanitize.hpp"
#include "molsight/chem/smiles.hpp"
#include "molsight/harness/featurize.hpp"
#include "molsight/harness/surrogate.hpp"
#include "molsight/io/csv.hpp"
#include "support/test_support.hpp"

using namespace molsight;
using namespace molsight::attr;
using namespace molsight::chem;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

// F(x) = sum_ij w_ij x_ij
struct LinearModel : ScalarModel {
  MatrixXd w;
  double value(const MatrixXd& x) const override { return (w.cwiseProduct(x)).sum(); }
  MatrixXd input_gradient(const MatrixXd& x) const override { return w; }
};

}  // namespace

TEST_CASE("integrated gradients closed form for linear models") {
  num::Rng rng(3);
  LinearModel model;
  model.w = MatrixXd(4, 5);
  MatrixXd x(4, 5), baseline(4, 5);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 5; ++c) {
      model.w(r, c) = rng.normal();
      x(r, c) = rng.normal();
      baseline(r, c) = rng.normal();
    }

  AttributionMap map = integrated_gradients(model, x, baseline, 1);
  MatrixXd expected = model.w.cwiseProduct(x - baseline);
  CHECK((map.attributions - expected).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(map.completeness_residual <= 1e-9);

  // x equal to the baseline: all attributions vanish
  AttributionMap zero = integrated_gradients(model, baseline, baseline, 8);
  CHECK(zero.attributions.isZero(0));
}

TEST_CASE("atom_scores aggregates absolute attributions") {
  AttributionMap map;
  map.attributions = MatrixXd::Zero(3, 4);
  CHECK(atom_scores(map).isZero(0));

  map.attributions(1, 2) = -2.0;
  VectorXd s = atom_scores(map);
  CHECK(s[1] == doctest::Approx(2.0));
  CHECK(s[0] == doctest::Approx(0.0));

  AttributionMap flipped = map;
  flipped.attributions = -map.attributions;
  CHECK((atom_scores(flipped) - s).norm() == doctest::Approx(0.0));
}

TEST_CASE("IG step-count convergence against a high-M oracle") {
  harness::SurrogateConfig cfg;
  cfg.seed = 17;
  harness::SurrogateModel model = harness::SurrogateModel::create(harness::kAtomFeatureWidth, cfg);
  Molecule mol = read_molecule("CC(=O)Nc1ccc(O)cc1");
  MatrixXd x = harness::featurize_atoms(mol);
  MatrixXd baseline = MatrixXd::Zero(x.rows(), x.cols());

  double total_64 = integrated_gradients(model, x, baseline, 64).attributions.sum();
  double total_4096 = integrated_gradients(model, x, baseline, 4096).attributions.sum();
  CHECK(std::abs(total_64 - total_4096) <= 0.02 * std::abs(total_4096));
}

TEST_CASE("extract_motifs selection rules") {
  // uniform scores on benzene: the ring is selected
  Molecule benzene = read_molecule("c1ccccc1");
  VectorXd uniform = VectorXd::Constant(6, 1.0);
  auto motifs = extract_motifs(benzene, uniform, 75, 1, 1.1);
  REQUIRE(motifs.size() == 1);
  CHECK(motifs[0].origin == MotifCandidate::Origin::Ring);
  CHECK(motifs[0].atoms.size() == 6);

  // toluene with the methyl scored 10x the ring atoms: methyl component wins
  Molecule toluene = read_molecule("Cc1ccccc1");
  VectorXd scores = VectorXd::Constant(7, 1.0);
  scores[0] = 10.0;
  motifs = extract_motifs(toluene, scores, 75, 1, 1.1);
  REQUIRE(motifs.size() == 1);
  CHECK(motifs[0].origin == MotifCandidate::Origin::Component);
  CHECK(motifs[0].atoms == std::vector<int>{0});

  // two disconnected high-score atoms, no rings: two singleton motifs
  Molecule hexane = read_molecule("CCCCCC");
  VectorXd two = VectorXd::Zero(6);
  two[0] = 9.0;
  two[5] = 8.0;  // 75th percentile of (9,0,0,0,0,8) is 6: both sit above it
  motifs = extract_motifs(hexane, two, 75, 2, 1.1);
  REQUIRE(motifs.size() == 2);
  CHECK(motifs[0].atoms == std::vector<int>{0});
  CHECK(motifs[1].atoms == std::vector<int>{5});

  // selected motifs are pairwise disjoint and dominate rejected candidates
  Molecule naph = read_molecule("c1ccc2ccccc2c1");
  VectorXd s = VectorXd::LinSpaced(10, 0.1, 1.0);
  auto sel = extract_motifs(naph, s, 75, 3, 1.1);
  for (size_t i = 0; i < sel.size(); ++i)
    for (size_t j = i + 1; j < sel.size(); ++j)
      for (int a : sel[i].atoms)
        for (int b : sel[j].atoms) CHECK(a != b);

  CHECK_THROWS_AS(extract_motifs(benzene, VectorXd::Zero(3), 75, 1, 1.1), ShapeMismatch);
}

TEST_CASE("percentile linear interpolation") {
  std::vector<double> v{1, 2, 3, 4};
  CHECK(percentile_linear(v, 0) == doctest::Approx(1.0));
  CHECK(percentile_linear(v, 100) == doctest::Approx(4.0));
  CHECK(percentile_linear(v, 50) == doctest::Approx(2.5));
  CHECK(percentile_linear(v, 75) == doctest::Approx(3.25));
}

TEST_CASE("apply_rule spec rewrites") {
  auto apply_named = [](const char* smiles, const char* rule_name) {
    Molecule mol = read_molecule(smiles);
    for (const TransformationRule& rule : default_rules()) {
      if (rule.name != rule_name) continue;
      auto sites = smarts::match_mappings(rule.pattern, mol, true);
      REQUIRE_MESSAGE(!sites.empty(), rule_name << " must match " << smiles);
      return apply_rule(mol, rule, sites[0]);
    }
    FAIL("rule not found");
    return Molecule{};
  };

  CHECK(graph_isomorphic(apply_named("Clc1ccccc1", "chloro_to_bromo"),
                         read_molecule("Brc1ccccc1")));
  CHECK(graph_isomorphic(apply_named("Cc1ccccc1", "methyl_to_fluorine"),
                         read_molecule("Fc1ccccc1")));
  CHECK(graph_isomorphic(apply_named("CC(=O)NC", "amide_to_ester"),
                         read_molecule("CC(=O)OC")));
  CHECK(graph_isomorphic(apply_named("CC(=O)OC", "ester_to_amide"),
                         read_molecule("CC(=O)NC")));
  CHECK(graph_isomorphic(apply_named("COC", "ether_to_thioether"),
                         read_molecule("CSC")));
  CHECK(graph_isomorphic(apply_named("Fc1ccccc1", "fluorine_to_methyl"),
                         read_molecule("Cc1ccccc1")));
}

TEST_CASE("apply_rule arity constraint") {
  Molecule dma = read_molecule("CC(=O)N(C)C");  // N,N-dimethylacetamide
  for (const TransformationRule& rule : default_rules()) {
    if (rule.name != "amide_to_ester") continue;
    auto sites = smarts::match_mappings(rule.pattern, dma, true);
    REQUIRE(!sites.empty());
    CHECK_THROWS_AS(apply_rule(dma, rule, sites[0]), RewiringImpossible);
  }
}

TEST_CASE("apply_rule rejects stale sites") {
  Molecule mol = read_molecule("Clc1ccccc1");
  const TransformationRule& bromo = default_rules()[3];  // bromo_to_chloro
  CHECK_THROWS_AS(apply_rule(mol, bromo, {0}), RuleNotApplicable);
}

TEST_CASE("sanitize gate on rule products: full rule x example sweep") {
  const std::vector<std::pair<std::string, std::string>> examples = {
      {"ether_to_thioether", "COC"},
      {"methyl_to_fluorine", "Cc1ccccc1"},
      {"chloro_to_bromo", "Clc1ccccc1"},
      {"bromo_to_chloro", "Brc1ccccc1"},
      {"amide_to_ester", "CC(=O)NC"},
      {"ester_to_amide", "CC(=O)OC"},
      {"fluorine_to_methyl", "Fc1ccccc1"},
  };
  for (const auto& [rule_name, smiles] : examples) {
    Molecule mol = read_molecule(smiles);
    for (const TransformationRule& rule : default_rules()) {
      if (rule.name != rule_name) continue;
      for (const auto& site : smarts::match_mappings(rule.pattern, mol, true)) {
        Molecule product = apply_rule(mol, rule, site);
        CHECK_MESSAGE(sanitize(product).ok(), rule_name << " on " << smiles);
        Molecule reparsed = read_molecule(write_smiles(product));
        CHECK(graph_isomorphic(product, reparsed));
        CHECK_FALSE(graph_isomorphic(product, mol));
      }
    }
  }
}

TEST_CASE("counterfactual_scan") {
  // no rule matches methane
  Molecule methane = read_molecule("C");
  MotifCandidate whole;
  whole.atoms = {0};
  whole.score = 1.0;
  ScanResult empty = counterfactual_scan(methane, {whole}, default_rules());
  CHECK(empty.results.empty());

  // chlorobenzene with the whole molecule as one motif
  Molecule clbz = read_molecule("Clc1ccccc1");
  MotifCandidate all;
  for (int i = 0; i < clbz.atom_count(); ++i) all.atoms.push_back(i);
  ScanResult scan = counterfactual_scan(clbz, {all}, default_rules());
  REQUIRE(scan.results.size() == 1);
  CHECK(scan.results[0].rule == "chloro_to_bromo");
  REQUIRE(scan.best_per_motif[0].has_value());

  // delta QED pinned by the fixture oracle
  auto rows = io::read_csv(test_support::fixture_path("descriptors_fixture.csv"));
  double qed_cl = 0, qed_br = 0;
  for (size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][0] == "chlorobenzene") qed_cl = std::stod(rows[i][9]);
    if (rows[i][0] == "bromobenzene") qed_br = std::stod(rows[i][9]);
  }
  REQUIRE(qed_cl > 0);
  REQUIRE(qed_br > 0);
  CHECK(std::abs(scan.results[0].delta_qed - (qed_br - qed_cl)) <= 2e-2 + 1e-9);

  // identity rule (test-only): delta QED is exactly zero
  TransformationRule identity{"identity", "[ClX1+0]",
                              smarts::compile_pattern("[ClX1+0]"), 0,
                              Element::Cl, -1};
  ScanResult id_scan = counterfactual_scan(clbz, {all}, {identity});
  REQUIRE(id_scan.results.size() == 1);
  CHECK(id_scan.results[0].delta_qed == 0.0);
}

TEST_CASE("invertible rule pair restores molecule, deltas cancel") {
  Molecule clbz = read_molecule("Clc1ccccc1");
  MotifCandidate all;
  for (int i = 0; i < clbz.atom_count(); ++i) all.atoms.push_back(i);

  const auto& rules = default_rules();
  const TransformationRule* fwd = nullptr;
  const TransformationRule* rev = nullptr;
  for (const auto& r : rules) {
    if (r.name == "chloro_to_bromo") fwd = &r;
    if (r.name == "bromo_to_chloro") rev = &r;
  }
  auto site = smarts::match_mappings(fwd->pattern, clbz, true)[0];
  Molecule bromo = apply_rule(clbz, *fwd, site);
  auto back_site = smarts::match_mappings(rev->pattern, bromo, true)[0];
  Molecule restored = apply_rule(bromo, *rev, back_site);
  CHECK(graph_isomorphic(restored, clbz));

  double q0 = desc::compute_descriptors(clbz).drug_likeness;
  double q1 = desc::compute_descriptors(bromo).drug_likeness;
  double q2 = desc::compute_descriptors(restored).drug_likeness;
  double delta_fwd = q1 - q0;
  double delta_rev = q2 - q1;
  CHECK(std::abs(delta_fwd + delta_rev) <= 1e-12);
}
