#pragma once

#include "physent/states.hpp"
#include "physent/types.hpp"

namespace physent {

// Projector onto the spatial support of one detector.
class Detector {
 public:
  explicit Detector(ComplexMatrix projector);
  const ComplexMatrix& projector() const { return projector_; }
  Eigen::Index dim() const { return projector_.rows(); }

 private:
  ComplexMatrix projector_;
};

// Left and right detectors with orthogonal supports (O_L O_R = 0).
class DetectorPair {
 public:
  DetectorPair(Detector left, Detector right);
  const Detector& left() const { return left_; }
  const Detector& right() const { return right_; }
  Eigen::Index dim() const { return left_.dim(); }

 private:
  Detector left_;
  Detector right_;
};

struct CoincidenceWeights {
  double d_lr = 0;       // P(A -> left, B -> right)
  double d_rl = 0;       // P(A -> right, B -> left)
  Complex gamma{0, 0};   // effective indistinguishability <A|O_L|B><B|O_R|A>
  double gamma_max = 0;  // sqrt(d_lr * d_rl)
};

CoincidenceWeights coincidence_weights(const DetectorPair& pair, const ExternalState& ext_a,
                                       const ExternalState& ext_b);

// O_L (x) alpha (x) O_R (x) beta  +  O_R (x) beta (x) O_L (x) alpha,
// acting on the two-particle space. alpha, beta are 2x2 Hermitian.
ComplexMatrix joint_observable(const DetectorPair& pair, const ComplexMatrix& alpha,
                               const ComplexMatrix& beta);

// Tr(O_d(1,1) rho_a): rate of events with one particle at each detector.
double coincidence_rate(const ComplexMatrix& rho_a, const DetectorPair& pair);

}  // namespace physent
