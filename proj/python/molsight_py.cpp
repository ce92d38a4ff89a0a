//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "molsight/attr/counterfactual.hpp"
#include "molsight/chem/perception.hpp"
#include "molsight/chem/sanitize.hpp"
#include "molsight/chem/smiles.hpp"
#include "molsight/desc/descriptors.hpp"
#include "molsight/harness/corpus.hpp"
#include "molsight/harness/featurize.hpp"
#include "molsight/harness/planted.hpp"
#include "molsight/harness/surrogate.hpp"
#include "molsight/num/metrics.hpp"
#include "molsight/probe/probe.hpp"
#include "molsight/sae/sae.hpp"
#include "molsight/smarts/motifs.hpp"

namespace py = pybind11;
using namespace molsight;

namespace {

chem::Molecule parse(const std::string& smiles) {
  try {
    return chem::read_molecule(smiles);
  } catch (const Error& e) {
    throw py::value_error(e.what());
  }
}

struct PyMolecule {
  chem::Molecule mol;
  explicit PyMolecule(const std::string& smiles) : mol(parse(smiles)) {}
};

struct PySae {
  sae::SaeModel model;
  Eigen::MatrixXd encode(const Eigen::MatrixXd& h) const { return sae::encode(model, h); }
};

struct PySurrogate {
  harness::SurrogateModel model;

  std::vector<double> atom_scores(const std::string& smiles, int steps) const {
    chem::Molecule mol = parse(smiles);
    Eigen::MatrixXd x = harness::featurize_atoms(mol);
    attr::AttributionMap map = attr::integrated_gradients(
        model, x, Eigen::MatrixXd::Zero(x.rows(), x.cols()), steps);
    Eigen::VectorXd s = attr::atom_scores(map);
    return {s.data(), s.data() + s.size()};
  }

  py::list counterfactuals(const std::string& smiles, int steps, double percentile,
                           int top_k, double ring_boost) const {
    chem::Molecule mol = parse(smiles);
    Eigen::MatrixXd x = harness::featurize_atoms(mol);
    attr::AttributionMap map = attr::integrated_gradients(
        model, x, Eigen::MatrixXd::Zero(x.rows(), x.cols()), steps);
    auto motifs = attr::extract_motifs(mol, attr::atom_scores(map), percentile, top_k,
                                       ring_boost);
    attr::ScanResult scan = attr::counterfactual_scan(mol, motifs, attr::default_rules());
    py::list out;
    for (const auto& r : scan.results) {
      py::dict d;
      d["motif_index"] = r.motif_index;
      d["rule"] = r.rule;
      d["site"] = r.site;
      d["product_smiles"] = r.product_smiles;
      d["qed_before"] = r.qed_before;
      d["qed_after"] = r.qed_after;
      d["delta_qed"] = r.delta_qed;
      out.append(std::move(d));
    }
    return out;
  }
};

}  // namespace

PYBIND11_MODULE(molsight, m) {
  m.doc() = "interpretability toolkit for molecular embeddings";
  m.attr("__version__") = std::string(kVersion);

  py::class_<PyMolecule>(m, "Molecule")
      .def(py::init<const std::string&>(), py::arg("smiles"))
      .def_property_readonly("atom_count",
                             [](const PyMolecule& p) { return p.mol.atom_count(); })
      .def_property_readonly("bond_count",
                             [](const PyMolecule& p) { return p.mol.bond_count(); })
      .def_property_readonly(
          "ring_count",
          [](const PyMolecule& p) { return static_cast<int>(p.mol.rings().size()); })
      .def_property_readonly("aromatic_atom_count",
                             [](const PyMolecule& p) {
                               int n = 0;
                               for (const auto& a : p.mol.atoms()) n += a.aromatic;
                               return n;
                             })
      .def("smiles", [](const PyMolecule& p) { return chem::write_smiles(p.mol); })
      .def("sanitize_ok",
           [](const PyMolecule& p) { return chem::sanitize(p.mol).ok(); });

  m.def("descriptors", [](const std::string& smiles) {
    desc::DescriptorRecord r = desc::compute_descriptors(parse(smiles));
    py::dict d;
    d["drug_likeness"] = r.drug_likeness;
    d["complexity"] = r.complexity;
    d["lipophilicity"] = r.lipophilicity;
    d["size"] = r.size;
    d["polarity"] = r.polarity;
    d["flexibility"] = r.flexibility;
    d["hba"] = r.hba;
    d["hbd"] = r.hbd;
    d["rotatable_bonds"] = r.rotb;
    d["aromatic_rings"] = r.arom_rings;
    return d;
  });

  m.def("motif_labels", [](const std::string& smiles) {
    static const smarts::MotifLibrary lib = smarts::MotifLibrary::default_library();
    auto labels = smarts::motif_labels(parse(smiles), lib);
    py::dict d;
    for (int i = 0; i < lib.size(); ++i) d[lib.entry(i).name.c_str()] = labels[i];
    return d;
  });

  m.def("match_smarts", [](const std::string& pattern, const std::string& smiles) {
    try {
      return smarts::match_pattern(smarts::compile_pattern(pattern), parse(smiles));
    } catch (const Error& e) {
      throw py::value_error(e.what());
    }
  });

  m.def("auroc", &num::auroc, py::arg("scores"), py::arg("labels"));
  m.def("average_precision", &num::average_precision, py::arg("scores"), py::arg("labels"));

  py::class_<PySae>(m, "SaeModel").def("encode", &PySae::encode);
  m.def(
      "train_sae",
      [](const Eigen::MatrixXd& h, int factors, double l1, int epochs, int batch_size,
         double lr, double dropout, std::uint64_t seed) {
        sae::SaeConfig cfg;
        cfg.factors = factors;
        cfg.l1 = l1;
        cfg.epochs = epochs;
        cfg.batch_size = batch_size;
        cfg.learning_rate = lr;
        cfg.dropout = dropout;
        cfg.seed = seed;
        return PySae{sae::train_sae(h, cfg).model};
      },
      py::arg("h"), py::arg("factors") = 128, py::arg("l1") = 0.01, py::arg("epochs") = 200,
      py::arg("batch_size") = 128, py::arg("lr") = 1e-3, py::arg("dropout") = 0.1,
      py::arg("seed") = 0);

  m.def(
      "generate_corpus",
      [](int n, std::uint64_t seed) { return harness::generate_corpus_smiles({n, seed, 4}); },
      py::arg("n"), py::arg("seed") = 1);

  m.def("featurize_atoms",
        [](const std::string& smiles) { return harness::featurize_atoms(parse(smiles)); });

  py::class_<PySurrogate>(m, "Surrogate")
      .def("atom_scores", &PySurrogate::atom_scores, py::arg("smiles"), py::arg("steps") = 64)
      .def("counterfactuals", &PySurrogate::counterfactuals, py::arg("smiles"),
           py::arg("steps") = 64, py::arg("percentile") = 75.0, py::arg("top_k") = 3,
           py::arg("ring_boost") = 1.1)
      .def("value", [](const PySurrogate& s, const std::string& smiles) {
        return s.model.value(harness::featurize_atoms(parse(smiles)));
      });

  m.def(
      "train_surrogate",
      [](const std::vector<std::string>& corpus, int epochs, std::uint64_t seed) {
        std::vector<Eigen::MatrixXd> feats;
        Eigen::VectorXd targets(static_cast<Eigen::Index>(corpus.size()));
        for (size_t i = 0; i < corpus.size(); ++i) {
          chem::Molecule mol = parse(corpus[i]);
          feats.push_back(harness::featurize_atoms(mol));
          targets[static_cast<Eigen::Index>(i)] =
              desc::compute_descriptors(mol).drug_likeness;
        }
        harness::SurrogateConfig cfg;
        cfg.epochs = epochs;
        cfg.seed = seed;
        harness::SurrogateModel model =
            harness::SurrogateModel::create(harness::kAtomFeatureWidth, cfg);
        harness::train_surrogate(model, feats, targets, cfg);
        return PySurrogate{std::move(model)};
      },
      py::arg("corpus"), py::arg("epochs") = 100, py::arg("seed") = 0);

  m.def(
      "generate_embeddings",
      [](const std::vector<std::string>& corpus, int dim, double sigma, std::uint64_t seed) {
        std::vector<chem::Molecule> mols;
        for (const auto& s : corpus) mols.push_back(parse(s));
        Eigen::MatrixXd rewards = desc::reward_matrix(mols).values;
        smarts::MotifLibrary lib = smarts::MotifLibrary::default_library();
        Eigen::MatrixXd labels(static_cast<Eigen::Index>(mols.size()), lib.size());
        std::vector<std::string> names;
        for (const auto& e : lib.entries()) names.push_back(e.name);
        for (size_t i = 0; i < mols.size(); ++i) {
          auto row = smarts::motif_labels(mols[i], lib);
          for (int mi = 0; mi < lib.size(); ++mi)
            labels(static_cast<Eigen::Index>(i), mi) = row[mi];
        }
        harness::PlantedSpec spec = harness::PlantedSpec::default_spec();
        spec.dim = dim;
        spec.noise_sigma = sigma;
        spec.seed = seed;
        harness::EmbeddingResult res = harness::generate_embeddings(
            rewards, {desc::kRewardSignalNames.begin(), desc::kRewardSignalNames.end()},
            labels, names, spec);
        return py::make_tuple(res.h, res.ledger.to_json());
      },
      py::arg("corpus"), py::arg("dim") = 256, py::arg("sigma") = 0.5, py::arg("seed") = 1);

  py::register_exception<Error>(m, "MolsightError");
}
