//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
// Bickerton, Paolini, Besnard, Muresan & Hopkins, Nature Chemistry 2012:
// published ADS parameters and mean weights for the eight QED properties.
#include <cmath>

#include "molsight/desc/descriptors.hpp"
#include "molsight/desc/qed.hpp"

namespace molsight::desc {

const std::array<AdsParams, 8> kAdsParameters = {{
    // MW
    {2.817065973, 392.5754953, 290.7489764, 2.419764353, 49.22325677, 65.37051707, 104.9805561},
    // ALOGP
    {3.172690585, 137.8624751, 2.534937431, 4.581497897, 0.822739154, 0.576295591, 131.3186604},
    // HBA
    {2.948620388, 160.4605972, 3.615294657, 4.435986202, 0.290141953, 1.300669958, 148.7763046},
    // HBD
    {1.618662227, 1010.051101, 0.985094388, 0.000000001, 0.713820843, 0.920922555, 258.1632616},
    // PSA
    {1.876861559, 125.2232657, 62.90773554, 87.83366614, 12.01999824, 28.51324732, 104.5686167},
    // ROTB
    {0.010000000, 272.4121427, 2.558379970, 1.565547684, 1.271567166, 2.758063707, 105.4420403},
    // AROM
    {3.217788970, 957.7374108, 2.274627939, 0.000000001, 1.317690384, 0.375760881, 312.3372610},
    // ALERTS
    {0.010000000, 1199.094025, -0.09002883, 0.000000001, 0.185904477, 0.875193782, 417.7253140},
}};

const std::array<double, 8> kQedWeightsMean = {0.66, 0.46, 0.05, 0.61, 0.06, 0.65, 0.48, 0.95};
const std::array<double, 8> kQedWeightsUnit = {1, 1, 1, 1, 1, 1, 1, 1};

double ads(double x, const AdsParams& p) {
  double exp1 = 1.0 + std::exp(-(x - p.c + p.d / 2.0) / p.e);
  double exp2 = 1.0 + std::exp(-(x - p.c - p.d / 2.0) / p.f);
  double dx = p.a + p.b / exp1 * (1.0 - 1.0 / exp2);
  return dx / p.dmax;
}

QedResult qed(const QedInputs& in, QedWeights weights) {
  const std::array<double, 8>& w =
      weights == QedWeights::Mean ? kQedWeightsMean : kQedWeightsUnit;
  const std::array<double, 8> values = {in.mw,  in.alogp, in.hba,  in.hbd,
                                        in.psa, in.rotb,  in.arom, in.alerts};
  QedResult result;
  double num = 0, den = 0;
  for (int i = 0; i < 8; ++i) {
    double d = ads(values[i], kAdsParameters[i]);
    if (d <= 1e-6) {
      d = 1e-6;
      result.clamped = true;
    }
    result.desirabilities[i] = d;
    num += w[i] * std::log(d);
    den += w[i];
  }
  result.value = std::exp(num / den);
  return result;
}

QedResult qed(const DescriptorRecord& rec, QedWeights weights) {
  QedInputs in;
  in.mw = rec.mw;
  in.alogp = rec.logp;
  in.hba = rec.hba;
  in.hbd = rec.hbd;
  in.psa = rec.psa;
  in.rotb = rec.rotb;
  in.arom = rec.arom_rings;
  in.alerts = rec.alerts;
  return qed(in, weights);
}

}  // namespace molsight::desc
