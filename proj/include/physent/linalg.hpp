#pragma once

#include <vector>

#include "physent/types.hpp"

namespace physent {

// Kronecker product, a-index major / b-index minor.
template <typename DerivedA, typename DerivedB>
auto tensor_product(const Eigen::MatrixBase<DerivedA>& a,
                    const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename Eigen::ScalarBinaryOpTraits<
      typename DerivedA::Scalar, typename DerivedB::Scalar>::ReturnType;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                            a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          Scalar(a(i, j)) * b.derived().template cast<Scalar>();
  return out;
}

inline bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol) {
  return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

// Tr(a * b) without forming the product.
inline Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw InvalidShape("trace_product: incompatible dimensions");
  return a.transpose().cwiseProduct(b).sum();
}

// Tr(op * rho) for pairs whose trace must be real (e.g. both Hermitian);
// an imaginary part above kImaginaryLeakTol is a ConsistencyError.
double real_expectation(const ComplexMatrix& op, const ComplexMatrix& rho);

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InvalidShape("max_abs_diff: shape mismatch");
  return (a - b).cwiseAbs().maxCoeff();
}

// Trace over slot `traced_slot` of a square operator on a tensor-product
// space with subsystem dimensions `dims` (slot 0 major). Preserves the trace.
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<Eigen::Index>& dims,
                            std::size_t traced_slot);

struct HermitianEigensystem {
  RealVector values;      // descending
  ComplexMatrix vectors;  // matching columns
};

// Cyclic Jacobi diagonalization for complex Hermitian matrices; iterates
// until the off-diagonal Frobenius norm drops below kJacobiTarget.
HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m);

// Eigenvalues only, descending.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

// Hermitian PSD square root. Eigenvalues in [-kEigenvalueClamp, 0) are
// treated as roundoff and clamped to zero; anything lower is rejected.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

// Singular values, descending, via one-sided Jacobi column rotations. Unlike
// the square root of an eigendecomposition of m^dagger m, this keeps tiny
// singular values at roundoff level instead of sqrt(roundoff).
RealVector singular_values(const ComplexMatrix& m);

}  // namespace physent
