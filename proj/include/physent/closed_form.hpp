#pragma once

#include "physent/measures.hpp"
#include "physent/tomography.hpp"

namespace physent {

// Scalar data of one detection scenario. gamma is restricted to real values
// here; the tomography path carries complex gamma without modification.
struct ScenarioParams {
  double d_lr = 0;
  double d_rl = 0;
  double gamma = 0;
  double epsilon = 0;
  int delta = +1;  // +1 boson, -1 fermion
};

// InvalidParams unless d_lr, d_rl are probabilities, delta is a sign and
// |gamma| <= sqrt(d_lr * d_rl).
void validate(const ScenarioParams& p);

// T = d_lr + d_rl + 4 delta gamma cos(eps) sin(eps), clamped at zero.
double closed_form_T(const ScenarioParams& p);

// X-form detector-level matrix: middle block [[T+a, b], [b, T-a]] / (2T)
// with a = (d_lr - d_rl) cos(2 eps) and
// b = 2 delta gamma + 2 (d_lr + d_rl) sin(eps) cos(eps).
DetectorLevelState closed_form_rho_d(const ScenarioParams& p);

// T, C_d = |b|/T, P_d = |a|/T, S_d from rho_d, and the complementarity
// residual (identically zero on this family).
MeasureReport closed_form_measures(const ScenarioParams& p);

}  // namespace physent
