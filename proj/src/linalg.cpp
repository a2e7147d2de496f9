#include "physent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace physent {

double real_expectation(const ComplexMatrix& op, const ComplexMatrix& rho) {
  const Complex value = trace_product(op, rho);
  if (std::abs(value.imag()) > kImaginaryLeakTol)
    throw ConsistencyError("real_expectation: imaginary part " + std::to_string(value.imag()));
  return value.real();
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<Eigen::Index>& dims,
                            std::size_t traced_slot) {
  if (m.rows() != m.cols()) throw InvalidShape("partial_trace: matrix must be square");
  if (dims.empty() || traced_slot >= dims.size())
    throw InvalidShape("partial_trace: traced slot out of range");
  Eigen::Index total = 1;
  for (Eigen::Index d : dims) {
    if (d < 1) throw InvalidShape("partial_trace: subsystem dimensions must be positive");
    total *= d;
  }
  if (total != m.rows())
    throw InvalidShape("partial_trace: subsystem dimensions do not match the matrix");

  std::vector<Eigen::Index> strides(dims.size());
  {
    Eigen::Index acc = 1;
    for (std::size_t s = dims.size(); s-- > 0;) {
      strides[s] = acc;
      acc *= dims[s];
    }
  }

  std::vector<Eigen::Index> kept_index(total), traced_digit(total);
  for (Eigen::Index idx = 0; idx < total; ++idx) {
    Eigen::Index kept = 0;
    for (std::size_t s = 0; s < dims.size(); ++s) {
      const Eigen::Index digit = (idx / strides[s]) % dims[s];
      if (s == traced_slot)
        traced_digit[idx] = digit;
      else
        kept = kept * dims[s] + digit;
    }
    kept_index[idx] = kept;
  }

  const Eigen::Index kept_dim = total / dims[traced_slot];
  ComplexMatrix out = ComplexMatrix::Zero(kept_dim, kept_dim);
  for (Eigen::Index r = 0; r < total; ++r)
    for (Eigen::Index c = 0; c < total; ++c)
      if (traced_digit[r] == traced_digit[c]) out(kept_index[r], kept_index[c]) += m(r, c);
  return out;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

}  // namespace

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidShape("hermitian_eigensystem: matrix must be square");
  if (!is_hermitian(m)) throw NotHermitian("hermitian_eigensystem: input is not Hermitian");

  const Eigen::Index n = m.rows();
  ComplexMatrix a = 0.5 * (m + m.adjoint());
  ComplexMatrix v = ComplexMatrix::Identity(n, n);

  constexpr int kMaxSweeps = 128;
  bool converged = off_diagonal_norm(a) <= kJacobiTarget;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double abs_pq = std::abs(a(p, q));
        if (abs_pq == 0.0) continue;
        const Complex phase = a(p, q) / abs_pq;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * abs_pq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;

        // A <- U^dagger A U with U(p,p) = c e^{i phi}, U(p,q) = s e^{i phi},
        // U(q,p) = -s, U(q,q) = c; the pivot is zeroed exactly.
        const Eigen::RowVectorXcd row_p = a.row(p);
        const Eigen::RowVectorXcd row_q = a.row(q);
        a.row(p) = c * std::conj(phase) * row_p - s * row_q;
        a.row(q) = s * std::conj(phase) * row_p + c * row_q;
        const ComplexVector col_p = a.col(p);
        const ComplexVector col_q = a.col(q);
        a.col(p) = c * phase * col_p - s * col_q;
        a.col(q) = s * phase * col_p + c * col_q;
        a(p, p) = c * c * app + s * s * aqq - 2.0 * s * c * abs_pq;
        a(q, q) = s * s * app + c * c * aqq + 2.0 * s * c * abs_pq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        const ComplexVector v_p = v.col(p);
        const ComplexVector v_q = v.col(q);
        v.col(p) = c * phase * v_p - s * v_q;
        v.col(q) = s * phase * v_p + c * v_q;
      }
    }
    converged = off_diagonal_norm(a) <= kJacobiTarget;
  }
  if (!converged)
    throw ConsistencyError("hermitian_eigensystem: sweep limit reached before convergence");

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&a](Eigen::Index x, Eigen::Index y) {
    return a(x, x).real() > a(y, y).real();
  });

  HermitianEigensystem out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(order[k], order[k]).real();
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  return hermitian_eigensystem(m).values;
}

RealVector singular_values(const ComplexMatrix& m) {
  ComplexMatrix b = m;
  const Eigen::Index cols = b.cols();

  constexpr int kMaxSweeps = 64;
  bool rotated = true;
  for (int sweep = 0; sweep < kMaxSweeps && rotated; ++sweep) {
    rotated = false;
    for (Eigen::Index p = 0; p + 1 < cols; ++p) {
      for (Eigen::Index q = p + 1; q < cols; ++q) {
        const Complex overlap = b.col(p).dot(b.col(q));
        const double abs_overlap = std::abs(overlap);
        const double norm_p = b.col(p).squaredNorm();
        const double norm_q = b.col(q).squaredNorm();
        if (abs_overlap <= 1e-15 * std::sqrt(norm_p * norm_q)) continue;
        rotated = true;

        const Complex phase = overlap / abs_overlap;
        const double tau = (norm_q - norm_p) / (2.0 * abs_overlap);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;

        const ComplexVector col_p = b.col(p);
        const ComplexVector col_q = b.col(q);
        b.col(p) = c * phase * col_p - s * col_q;
        b.col(q) = s * phase * col_p + c * col_q;
      }
    }
  }
  if (rotated)
    throw ConsistencyError("singular_values: sweep limit reached before convergence");

  RealVector sigma(cols);
  for (Eigen::Index j = 0; j < cols; ++j) sigma(j) = b.col(j).norm();
  std::sort(sigma.begin(), sigma.end(), std::greater<>());
  return sigma;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const HermitianEigensystem eig = hermitian_eigensystem(m);
  RealVector roots(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const double lambda = eig.values(i);
    if (lambda < -kEigenvalueClamp)
      throw NotPSD("psd_sqrt: eigenvalue " + std::to_string(lambda) + " is negative");
    roots(i) = std::sqrt(std::max(lambda, 0.0));
  }
  const ComplexMatrix s =
      eig.vectors * roots.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  return 0.5 * (s + s.adjoint());
}

}  // namespace physent
