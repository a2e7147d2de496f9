#include "physent/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "physent/linalg.hpp"
#include "physent/paulis.hpp"

namespace physent {

double wootters_concurrence(const DetectorLevelState& state) {
  const ComplexMatrix& rho = state.rho();
  const ComplexMatrix flip = tensor_product(pauli_y(), pauli_y());
  const ComplexMatrix spin_flipped = flip * rho.conjugate() * flip;

  // The lambda_i are the singular values of sqrt(rho~) sqrt(rho), whose Gram
  // matrix is the Hermitian product sqrt(rho) rho~ sqrt(rho); computing them
  // one-sidedly keeps the zero lambdas at roundoff instead of sqrt(roundoff).
  const ComplexMatrix product = psd_sqrt(spin_flipped) * psd_sqrt(rho);
  const RealVector lambda = singular_values(product);
  return std::max(0.0, lambda(0) - lambda(1) - lambda(2) - lambda(3));
}

double linear_entropy(const DetectorLevelState& state) {
  return 1.0 - trace_product(state.rho(), state.rho()).real();
}

double predictability(const DetectorLevelState& state) {
  const ComplexMatrix reduced = partial_trace(state.rho(), {2, 2}, 0);
  return std::abs(real_expectation(pauli_z(), reduced));
}

MeasureReport measure_report(const DetectorLevelState& state, double t) {
  MeasureReport report;
  report.t = t;
  report.c_d = wootters_concurrence(state);
  report.p_d = predictability(state);
  report.s_d = linear_entropy(state);
  report.residual = 1.0 - report.c_d * report.c_d - report.p_d * report.p_d - 2.0 * report.s_d;
  return report;
}

}  // namespace physent
