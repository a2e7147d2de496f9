#pragma once

#include "physent/tomography.hpp"

namespace physent {

// Diagnostics of one detector-level state. For states reconstructed from the
// coincidence family the residual vanishes identically; it is not zero for
// arbitrary two-qubit states.
struct MeasureReport {
  double t = 0;         // coincidence rate
  double c_d = 0;       // physical concurrence
  double p_d = 0;       // single-particle predictability
  double s_d = 0;       // two-particle linear entropy
  double residual = 0;  // 1 - c_d^2 - p_d^2 - 2 s_d
};

// Concurrence via the spin-flipped matrix rho~ = (sy (x) sy) conj(rho)
// (sy (x) sy): the lambda_i are the descending square roots of the spectrum
// of sqrt(rho) rho~ sqrt(rho), evaluated as singular values of
// sqrt(rho~) sqrt(rho), and C = max(0, l1 - l2 - l3 - l4).
double wootters_concurrence(const DetectorLevelState& state);

// 1 - Tr(rho^2).
double linear_entropy(const DetectorLevelState& state);

// |Tr(sigma_z Tr_L(rho))|: ability to predict one party's spin outcome.
double predictability(const DetectorLevelState& state);

MeasureReport measure_report(const DetectorLevelState& state, double t);

}  // namespace physent
