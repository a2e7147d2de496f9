#include "physent/states.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace physent {

namespace {

void check_unit_norm(const ComplexVector& v, const char* what) {
  if (std::abs(v.norm() - 1.0) > kUnitNormTol)
    throw InvalidParams(std::string(what) + ": vector must be unit norm");
}

}  // namespace

ExternalState::ExternalState(ComplexVector vec) : vec_(std::move(vec)) {
  if (vec_.size() < 1) throw InvalidShape("ExternalState: dimension must be positive");
  check_unit_norm(vec_, "ExternalState");
}

InternalState::InternalState(ComplexVector vec) : vec_(std::move(vec)) {
  if (vec_.size() != 2) throw InvalidShape("InternalState: dimension must be 2");
  check_unit_norm(vec_, "InternalState");
}

InternalState spin_up() {
  ComplexVector v(2);
  v << 1, 0;
  return InternalState(v);
}

InternalState spin_down() {
  ComplexVector v(2);
  v << 0, 1;
  return InternalState(v);
}

ComplexVector single_particle_vector(const ExternalState& ext, const InternalState& internal) {
  return tensor_product(ext.vec(), internal.vec());
}

ComplexMatrix swap_operator(Eigen::Index single_dim) {
  if (single_dim < 1) throw InvalidShape("swap_operator: dimension must be positive");
  const Eigen::Index d2 = single_dim * single_dim;
  ComplexMatrix p = ComplexMatrix::Zero(d2, d2);
  for (Eigen::Index i = 0; i < single_dim; ++i)
    for (Eigen::Index j = 0; j < single_dim; ++j) p(j * single_dim + i, i * single_dim + j) = 1.0;
  return p;
}

TwoParticleState::TwoParticleState(ComplexVector vec, Eigen::Index ext_dim, Statistics stats)
    : vec_(std::move(vec)), ext_dim_(ext_dim), stats_(stats) {
  if (ext_dim_ < 1) throw InvalidShape("TwoParticleState: external dimension must be positive");
  const Eigen::Index single = 2 * ext_dim_;
  if (vec_.size() != single * single)
    throw InvalidShape("TwoParticleState: vector dimension must be (2M)^2");
  check_unit_norm(vec_, "TwoParticleState");
  const double delta = exchange_sign(stats_);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < single; ++i)
    for (Eigen::Index j = 0; j < single; ++j)
      worst = std::max(worst,
                       std::abs(vec_(j * single + i) - delta * vec_(i * single + j)));
  if (worst > kUnitNormTol)
    throw InvalidParams("TwoParticleState: exchange symmetry violated");
}

TwoParticleState symmetrized_product(const ExternalState& ext_a, const InternalState& int_a,
                                     const ExternalState& ext_b, const InternalState& int_b,
                                     Statistics stats) {
  if (ext_a.dim() != ext_b.dim())
    throw InvalidShape("symmetrized_product: external dimensions differ");
  const ComplexVector sp_a = single_particle_vector(ext_a, int_a);
  const ComplexVector sp_b = single_particle_vector(ext_b, int_b);
  const double delta = exchange_sign(stats);
  const ComplexVector v = tensor_product(sp_a, sp_b) + delta * tensor_product(sp_b, sp_a);
  const double norm = v.norm();
  if (norm <= kUnitNormTol)
    throw PauliExclusion("symmetrized_product: antisymmetrized state vanishes");
  return TwoParticleState(v / norm, ext_a.dim(), stats);
}

TwoParticleState paradigmatic_state(const ExternalState& ext_a, const ExternalState& ext_b,
                                    double epsilon, Statistics stats) {
  if (ext_a.dim() != ext_b.dim())
    throw InvalidShape("paradigmatic_state: external dimensions differ");
  if (!std::isfinite(epsilon)) throw InvalidParams("paradigmatic_state: epsilon must be finite");
  if (std::abs(ext_a.vec().dot(ext_b.vec())) > kOrthogonalityTol)
    throw AssumptionViolated("paradigmatic_state: external states must be orthogonal");

  const ComplexVector a_up = single_particle_vector(ext_a, spin_up());
  const ComplexVector a_down = single_particle_vector(ext_a, spin_down());
  const ComplexVector b_up = single_particle_vector(ext_b, spin_up());
  const ComplexVector b_down = single_particle_vector(ext_b, spin_down());

  const double c = std::cos(epsilon);
  const double s = std::sin(epsilon);
  const double delta = exchange_sign(stats);
  const ComplexVector v =
      (c * tensor_product(a_up, b_down) + s * tensor_product(a_down, b_up) +
       delta * (c * tensor_product(b_down, a_up) + s * tensor_product(b_up, a_down))) /
      std::numbers::sqrt2;
  return TwoParticleState(v, ext_a.dim(), stats);
}

double a_priori_concurrence(double epsilon) {
  return 2.0 * std::abs(std::cos(epsilon) * std::sin(epsilon));
}

ComplexMatrix density_matrix(const TwoParticleState& state) {
  return state.vec() * state.vec().adjoint();
}

}  // namespace physent
