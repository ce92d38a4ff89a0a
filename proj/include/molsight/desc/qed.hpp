//
// Project molsight - Copyright 2026 molsight developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <array>

namespace molsight::desc {

struct DescriptorRecord;

/// Asymmetric double sigmoid parameters (Bickerton et al. 2012).
struct AdsParams {
  double a, b, c, d, e, f, dmax;
};

/// Property order: MW, ALOGP, HBA, HBD, PSA, ROTB, AROM, ALERTS.
extern const std::array<AdsParams, 8> kAdsParameters;
extern const std::array<double, 8> kQedWeightsMean;
extern const std::array<double, 8> kQedWeightsUnit;

enum class QedWeights { Unit, Mean };

struct QedInputs {
  double mw = 0;
  double alogp = 0;
  double hba = 0;
  double hbd = 0;
  double psa = 0;
  double rotb = 0;
  double arom = 0;
  double alerts = 0;
};

struct QedResult {
  double value = 0;
  std::array<double, 8> desirabilities{};
  bool clamped = false;  // some desirability underflowed and was floored at 1e-6
};

double ads(double x, const AdsParams& p);

/// Weighted geometric mean of the eight desirability functions; in (0, 1].
QedResult qed(const QedInputs& in, QedWeights weights = QedWeights::Mean);
QedResult qed(const DescriptorRecord& rec, QedWeights weights = QedWeights::Mean);

}  // namespace molsight::desc
