#pragma once

#include "physent/linalg.hpp"
#include "physent/types.hpp"

namespace physent {

// Exchange statistics; the underlying value is the exchange sign delta.
enum class Statistics : int { Boson = +1, Fermion = -1 };

inline int exchange_sign(Statistics s) { return static_cast<int>(s); }

inline const char* statistics_name(Statistics s) {
  return s == Statistics::Boson ? "boson" : "fermion";
}

// Unit-norm state of the external (spatial mode) space.
class ExternalState {
 public:
  explicit ExternalState(ComplexVector vec);
  const ComplexVector& vec() const { return vec_; }
  Eigen::Index dim() const { return vec_.size(); }

 private:
  ComplexVector vec_;
};

// Unit-norm internal qubit, basis order (up, down).
class InternalState {
 public:
  explicit InternalState(ComplexVector vec);
  const ComplexVector& vec() const { return vec_; }

 private:
  ComplexVector vec_;
};

InternalState spin_up();
InternalState spin_down();

// external (x) internal, external-major.
ComplexVector single_particle_vector(const ExternalState& ext, const InternalState& internal);

// Particle-swap permutation on the two-particle space; single_dim is the
// dimension of one particle's external (x) internal space.
ComplexMatrix swap_operator(Eigen::Index single_dim);

// Normalized two-particle state with definite exchange symmetry: swapping
// the particle slots multiplies the vector by the exchange sign.
class TwoParticleState {
 public:
  TwoParticleState(ComplexVector vec, Eigen::Index ext_dim, Statistics stats);
  const ComplexVector& vec() const { return vec_; }
  Eigen::Index ext_dim() const { return ext_dim_; }
  Statistics statistics() const { return stats_; }

 private:
  ComplexVector vec_;
  Eigen::Index ext_dim_;
  Statistics stats_;
};

// (|A,a>|B,b> + delta |B,b>|A,a>) / norm. Vanishing norm (fermions in
// identical single-particle states) is a PauliExclusion error.
TwoParticleState symmetrized_product(const ExternalState& ext_a, const InternalState& int_a,
                                     const ExternalState& ext_b, const InternalState& int_b,
                                     Statistics stats);

// cos(eps)|A,up>|B,down> + sin(eps)|A,down>|B,up> plus the delta-weighted
// swapped terms, overall factor 1/sqrt(2). Requires <A|B> = 0, which also
// makes the result unit norm. eps is unrestricted (radians).
TwoParticleState paradigmatic_state(const ExternalState& ext_a, const ExternalState& ext_b,
                                    double epsilon, Statistics stats);

// Concurrence assigned by labeling the particles with their external states:
// 2 |cos(eps) sin(eps)|.
double a_priori_concurrence(double epsilon);

// |psi><psi|.
ComplexMatrix density_matrix(const TwoParticleState& state);

}  // namespace physent
