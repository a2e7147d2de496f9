#include "physent/tomography.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "physent/linalg.hpp"
#include "physent/paulis.hpp"

namespace physent {

std::array<ComplexMatrix, 4> observable_basis() {
  return {identity2(), pauli_x(), pauli_y(), pauli_z()};
}

DetectorLevelState::DetectorLevelState(ComplexMatrix rho) : rho_(std::move(rho)) {
  if (rho_.rows() != 4 || rho_.cols() != 4)
    throw InvalidShape("DetectorLevelState: matrix must be 4x4");
  if (!is_hermitian(rho_)) throw NotHermitian("DetectorLevelState: matrix must be Hermitian");
  if (std::abs(rho_.trace() - Complex(1.0, 0.0)) > kHermitianTol)
    throw InvalidParams("DetectorLevelState: trace must be 1");
  const double lowest = hermitian_eigenvalues(rho_).minCoeff();
  if (lowest < -kHermitianTol)
    throw NotPSD("DetectorLevelState: negative eigenvalue " + std::to_string(lowest));
}

ComplexMatrix reconstruct_unnormalized(const ComplexMatrix& rho_a, const DetectorPair& pair) {
  const Eigen::Index dim = 4 * pair.dim() * pair.dim();
  if (rho_a.rows() != dim || rho_a.cols() != dim)
    throw InvalidShape("reconstruct: rho_a must act on the two-particle space");
  if (!is_hermitian(rho_a)) throw NotHermitian("reconstruct: rho_a must be Hermitian");

  // All sixteen terms are evaluated even where symmetry makes some vanish.
  const std::array<ComplexMatrix, 4> basis = observable_basis();
  ComplexMatrix acc = ComplexMatrix::Zero(4, 4);
  for (const ComplexMatrix& chi_left : basis)
    for (const ComplexMatrix& chi_right : basis)
      acc += real_expectation(joint_observable(pair, chi_left, chi_right), rho_a) *
             tensor_product(chi_left, chi_right);
  return acc / 16.0;
}

DetectorLevelState reconstruct(const ComplexMatrix& rho_a, const DetectorPair& pair) {
  const double t = coincidence_rate(rho_a, pair);
  if (!(t > kCoincidenceFloor))
    throw NoCoincidences("reconstruct: coincidence rate " + std::to_string(t) +
                         " is below the post-selection floor");
  const ComplexMatrix unnormalized = reconstruct_unnormalized(rho_a, pair);
  return DetectorLevelState(unnormalized / unnormalized.trace().real());
}

}  // namespace physent
