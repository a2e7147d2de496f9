#include "physent/detection.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "physent/linalg.hpp"
#include "physent/paulis.hpp"

namespace physent {

Detector::Detector(ComplexMatrix projector) : projector_(std::move(projector)) {
  if (projector_.rows() != projector_.cols() || projector_.rows() < 1)
    throw InvalidShape("Detector: projector must be square");
  if (!is_hermitian(projector_)) throw NotHermitian("Detector: projector must be Hermitian");
  if (max_abs_diff(projector_ * projector_, projector_) > kHermitianTol)
    throw InvalidParams("Detector: projector must be idempotent");
}

DetectorPair::DetectorPair(Detector left, Detector right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_.dim() != right_.dim()) throw InvalidShape("DetectorPair: detector dimensions differ");
  if ((left_.projector() * right_.projector()).cwiseAbs().maxCoeff() > kHermitianTol)
    throw InvalidParams("DetectorPair: detector supports must be orthogonal");
}

namespace {

double projector_overlap(const ComplexVector& state, const ComplexMatrix& projector) {
  const Complex z = state.dot(projector * state);
  if (std::abs(z.imag()) > kImaginaryLeakTol)
    throw ConsistencyError("coincidence_weights: projector expectation is not real");
  return std::clamp(z.real(), 0.0, 1.0);
}

}  // namespace

CoincidenceWeights coincidence_weights(const DetectorPair& pair, const ExternalState& ext_a,
                                       const ExternalState& ext_b) {
  if (ext_a.dim() != pair.dim() || ext_b.dim() != pair.dim())
    throw InvalidShape("coincidence_weights: state and detector dimensions differ");
  const ComplexMatrix& left = pair.left().projector();
  const ComplexMatrix& right = pair.right().projector();
  const ComplexVector& a = ext_a.vec();
  const ComplexVector& b = ext_b.vec();

  CoincidenceWeights w;
  w.d_lr = projector_overlap(a, left) * projector_overlap(b, right);
  w.d_rl = projector_overlap(a, right) * projector_overlap(b, left);
  w.gamma = a.dot(left * b) * b.dot(right * a);
  w.gamma_max = std::sqrt(w.d_lr * w.d_rl);
  return w;
}

ComplexMatrix joint_observable(const DetectorPair& pair, const ComplexMatrix& alpha,
                               const ComplexMatrix& beta) {
  if (alpha.rows() != 2 || alpha.cols() != 2 || beta.rows() != 2 || beta.cols() != 2)
    throw InvalidShape("joint_observable: internal observables must be 2x2");
  if (!is_hermitian(alpha) || !is_hermitian(beta))
    throw NotHermitian("joint_observable: internal observables must be Hermitian");
  const ComplexMatrix& left = pair.left().projector();
  const ComplexMatrix& right = pair.right().projector();
  return tensor_product(tensor_product(tensor_product(left, alpha), right), beta) +
         tensor_product(tensor_product(tensor_product(right, beta), left), alpha);
}

double coincidence_rate(const ComplexMatrix& rho_a, const DetectorPair& pair) {
  const Eigen::Index dim = 4 * pair.dim() * pair.dim();
  if (rho_a.rows() != dim || rho_a.cols() != dim)
    throw InvalidShape("coincidence_rate: rho_a must act on the two-particle space");
  const double t = real_expectation(joint_observable(pair, identity2(), identity2()), rho_a);
  if (t < -kEigenvalueClamp)
    throw ConsistencyError("coincidence_rate: negative rate " + std::to_string(t));
  return std::max(t, 0.0);
}

}  // namespace physent
