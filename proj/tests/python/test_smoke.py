# Project molsight - Copyright 2026 molsight developers.
# SPDX-License-Identifier: Apache-2.0
#
# Smoke tests for the python bindings; metric implementations are
# cross-checked against scikit-learn as an independent oracle.
import numpy as np
import pytest

import molsight


def test_parse_and_write():
    mol = molsight.Molecule("c1ccccc1")
    assert mol.atom_count == 6
    assert mol.bond_count == 6
    assert mol.ring_count == 1
    assert mol.aromatic_atom_count == 6
    back = molsight.Molecule(mol.smiles())
    assert back.atom_count == 6

    with pytest.raises(ValueError):
        molsight.Molecule("C1CC")


def test_descriptors():
    d = molsight.descriptors("CCO")
    assert d["polarity"] == pytest.approx(20.23)
    assert d["size"] == pytest.approx(46.069, abs=0.01)
    assert 0 < d["drug_likeness"] <= 1
    b = molsight.descriptors("c1ccccc1")
    assert b["lipophilicity"] == pytest.approx(1.6866, abs=1e-4)


def test_motifs():
    labels = molsight.motif_labels("Clc1ccccc1")
    assert labels["halogen_Cl"] == 1
    assert labels["phenyl"] == 1
    assert labels["halogen_F"] == 0
    matches = molsight.match_smarts("[F]", "FC(F)F")
    assert len(matches) == 3


def test_metrics_against_sklearn():
    from sklearn.metrics import average_precision_score, roc_auc_score

    rng = np.random.default_rng(7)
    scores = rng.normal(size=200)
    labels = (rng.random(200) < 0.3).astype(float)
    labels[0], labels[1] = 1.0, 0.0
    assert molsight.auroc(scores, labels) == pytest.approx(
        roc_auc_score(labels, scores), abs=1e-12)
    assert molsight.average_precision(scores, labels) == pytest.approx(
        average_precision_score(labels, scores), abs=1e-12)


def test_sae_recovers_planted_direction():
    rng = np.random.default_rng(3)
    signal = rng.normal(size=500)
    carrier = rng.normal(size=24)
    carrier /= np.linalg.norm(carrier)
    h = np.outer(3.0 * signal, carrier) + 0.3 * rng.normal(size=(500, 24))
    model = molsight.train_sae(h, factors=12, epochs=40, batch_size=64, seed=5)
    z = model.encode(h)
    assert z.shape == (500, 12)
    assert z.min() >= 0.0
    best = max(abs(np.corrcoef(z[:, f], signal)[0, 1])
               for f in range(12) if z[:, f].std() > 0)
    assert best >= 0.8


def test_harness_and_saliency():
    corpus = molsight.generate_corpus(30, seed=11)
    assert len(corpus) == 30
    feats = molsight.featurize_atoms(corpus[0])
    assert feats.shape[1] == 18

    surrogate = molsight.train_surrogate(corpus, epochs=5, seed=2)
    scores = surrogate.atom_scores(corpus[0], steps=8)
    mol = molsight.Molecule(corpus[0])
    assert len(scores) == mol.atom_count
    assert all(s >= 0 for s in scores)

    results = surrogate.counterfactuals("Clc1ccccc1", steps=8)
    assert any(r["rule"] == "chloro_to_bromo" for r in results)
