#pragma once

#include <array>

#include "physent/detection.hpp"
#include "physent/types.hpp"

namespace physent {

// Complete single-qubit observable set (identity, sigma_x, sigma_y, sigma_z),
// orthogonal under the trace inner product: Tr(chi_i chi_j) = 2 delta_ij.
std::array<ComplexMatrix, 4> observable_basis();

// 4x4 two-qubit density matrix in the detector basis
// |L up, R up>, |L up, R down>, |L down, R up>, |L down, R down>.
class DetectorLevelState {
 public:
  explicit DetectorLevelState(ComplexMatrix rho);
  const ComplexMatrix& rho() const { return rho_; }

 private:
  ComplexMatrix rho_;
};

// Linear (pre-normalization) part of the tomographic reconstruction:
// sum_ij chi_i (x) chi_j Tr(O_d(chi_i, chi_j) rho_a) / 16.
ComplexMatrix reconstruct_unnormalized(const ComplexMatrix& rho_a, const DetectorPair& pair);

// Detector-level state assembled from the sixteen joint expectation values
// and post-selected on coincident events; NoCoincidences when the
// coincidence rate is below kCoincidenceFloor.
DetectorLevelState reconstruct(const ComplexMatrix& rho_a, const DetectorPair& pair);

}  // namespace physent
