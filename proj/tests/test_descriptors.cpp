//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <doctest.h>

#include <cmath>

#include "molsight/chem/perception.hpp"
#include "molsight/desc/descriptors.hpp"
#include "molsight/io/csv.hpp"
#include "support/test_support.hpp"

using namespace molsight;
using namespace molsight::chem;
using namespace molsight::desc;

namespace {

struct FixtureRow {
  std::string name, smiles;
  double mw, tpsa, logp, qed_mean, qed_unit;
  int hba, hbd, rotb, arom_rings;
};

std::vector<FixtureRow> load_fixture() {
  auto rows = io::read_csv(test_support::fixture_path("descriptors_fixture.csv"));
  std::vector<FixtureRow> out;
  for (size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    REQUIRE(r.size() == 11);
    out.push_back({r[0], r[1], std::stod(r[2]), std::stod(r[3]), std::stod(r[4]),
                   std::stod(r[9]), std::stod(r[10]), std::stoi(r[5]), std::stoi(r[6]),
                   std::stoi(r[7]), std::stoi(r[8])});
  }
  return out;
}

}  // namespace

TEST_CASE("descriptor spec examples") {
  Molecule benzene = read_molecule("c1ccccc1");
  DescriptorRecord b = compute_descriptors(benzene);
  CHECK(b.psa == doctest::Approx(0.0).epsilon(1e-12));

  Molecule ethanol = read_molecule("CCO");
  DescriptorRecord e = compute_descriptors(ethanol);
  CHECK(e.hbd == 1);
  CHECK(e.hba == 1);
  CHECK(e.flexibility == 0);  // terminal bonds excluded by the degree rule
  CHECK(e.psa == doctest::Approx(20.23).epsilon(1e-12));
}

TEST_CASE("fixture corpus equivalence against the committed oracle") {
  auto fixture = load_fixture();
  REQUIRE(fixture.size() == 50);
  for (const FixtureRow& row : fixture) {
    CAPTURE(row.smiles);
    Molecule mol = read_molecule(row.smiles);
    DescriptorRecord rec = compute_descriptors(mol);
    CHECK(std::abs(rec.mw - row.mw) <= 0.01);
    CHECK(std::abs(rec.psa - row.tpsa) <= 0.01);
    CHECK(std::abs(rec.logp - row.logp) <= 0.01);
    CHECK(rec.hba == row.hba);
    CHECK(rec.hbd == row.hbd);
    CHECK(rec.rotb == row.rotb);
    CHECK(rec.arom_rings == row.arom_rings);
    CHECK(std::abs(rec.drug_likeness - row.qed_mean) <= 0.02);
  }
}

TEST_CASE("qed closed forms and fixture parity") {
  // all desirabilities equal 1 -> QED 1 (geometric mean of ones);
  // synthesize inputs at each ADS maximum is impractical, check the identity
  // directly on the weighted-mean formula with d = 1 everywhere via the
  // clamp-free path: ln 1 = 0.
  QedInputs perfect;  // values do not matter for this identity check below

  // unit weights, one desirability 0.25: QED = 0.25^(1/8)
  double expected = std::pow(0.25, 1.0 / 8.0);
  CHECK(expected == doctest::Approx(0.8409).epsilon(1e-4));

  // qed-from-inputs parity with the oracle (same descriptor inputs)
  for (const FixtureRow& row : load_fixture()) {
    Molecule mol = read_molecule(row.smiles);
    DescriptorRecord rec = compute_descriptors(mol);
    QedInputs in;
    in.mw = row.mw;
    in.alogp = row.logp;
    in.hba = row.hba;
    in.hbd = row.hbd;
    in.psa = row.tpsa;
    in.rotb = row.rotb;
    in.arom = row.arom_rings;
    in.alerts = 0;
    CHECK(std::abs(qed(in, QedWeights::Mean).value - row.qed_mean) <= 1e-3);
    CHECK(std::abs(qed(in, QedWeights::Unit).value - row.qed_unit) <= 1e-3);
    CHECK(rec.drug_likeness > 0.0);
    CHECK(rec.drug_likeness <= 1.0);
  }
}

TEST_CASE("qed monotone in each desirability") {
  // QED is a weighted geometric mean: raising any single desirability must
  // not lower it. Perturb via inputs that move one ADS at a time.
  QedInputs base;
  base.mw = 300;
  base.alogp = 2.0;
  base.hba = 4;
  base.hbd = 1;
  base.psa = 60;
  base.rotb = 4;
  base.arom = 2;
  base.alerts = 0;
  QedResult r0 = qed(base);
  // HBD ADS is monotone decreasing past its peak; more donors -> lower d
  QedInputs worse = base;
  worse.hbd = 8;
  CHECK(qed(worse).desirabilities[3] < r0.desirabilities[3]);
  CHECK(qed(worse).value < r0.value);

  QedInputs better = base;
  better.alerts = 0;  // unchanged
  CHECK(qed(better).value == doctest::Approx(r0.value));
}

TEST_CASE("MW strictly increases under fluorine substitution") {
  double delta = 18.998403163 - 1.008;  // F replaces an H
  auto mw_of = [](const char* smi) { return compute_descriptors(read_molecule(smi)).mw; };
  CHECK(mw_of("Fc1ccccc1") - mw_of("c1ccccc1") == doctest::Approx(delta));
  CHECK(mw_of("CC(F)C") - mw_of("CCC") == doctest::Approx(delta));
  CHECK(mw_of("FCCO") - mw_of("CCO") == doctest::Approx(delta));
}

TEST_CASE("polarity invariant under C/H-only changes") {
  auto psa = [](const char* smi) { return compute_descriptors(read_molecule(smi)).psa; };
  CHECK(psa("Cc1ccccc1") == psa("c1ccccc1"));
  CHECK(psa("CCO") == psa("CCCO"));
  CHECK(psa("CC(=O)NC") == psa("CCC(=O)NCC"));
}

TEST_CASE("reward_matrix") {
  Molecule benzene = read_molecule("c1ccccc1");
  RewardMatrix rm = reward_matrix({benzene});
  CHECK(rm.values.rows() == 1);
  CHECK(rm.values.cols() == 6);
  for (int i = 0; i < 6; ++i) CHECK(rm.stddev[i] == doctest::Approx(0.0));

  RewardMatrix dup = reward_matrix({benzene, benzene});
  CHECK(dup.values.row(0) == dup.values.row(1));
  CHECK_THROWS_AS(reward_matrix({}), EmptyCorpus);
}
