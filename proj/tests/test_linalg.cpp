#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "physent/linalg.hpp"
#include "physent/paulis.hpp"
#include "test_support.hpp"

using namespace physent;
using testsupport::Rng;

namespace {

// Independent oracle for Hermitian spectra: characteristic polynomial
// coefficients from power-sum traces (Newton's identities), roots located by
// sign-change scan plus bisection. Shares nothing with the Jacobi solver.
std::vector<double> char_poly_coeffs(const ComplexMatrix& h) {
  const int n = static_cast<int>(h.rows());
  std::vector<double> power(n + 1);
  power[0] = n;
  ComplexMatrix acc = ComplexMatrix::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    acc = (acc * h).eval();
    power[k] = acc.trace().real();
  }
  std::vector<double> elem(n + 1);
  elem[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    double sum = 0.0;
    for (int i = 1; i <= k; ++i) sum += (i % 2 == 1 ? 1.0 : -1.0) * elem[k - i] * power[i];
    elem[k] = sum / k;
  }
  // p(x) = sum_k (-1)^k e_k x^{n-k}, monic.
  std::vector<double> coeff(n + 1);
  for (int k = 0; k <= n; ++k) coeff[k] = (k % 2 == 0 ? 1.0 : -1.0) * elem[k];
  return coeff;
}

double eval_poly(const std::vector<double>& coeff, double x) {
  double value = 0.0;
  for (double c : coeff) value = value * x + c;
  return value;
}

std::vector<double> bisect_roots(const std::vector<double>& coeff) {
  double bound = 1.0;
  for (double c : coeff) bound += std::abs(c);
  const int cells = 200000;
  std::vector<double> roots;
  double prev_x = -bound;
  double prev_f = eval_poly(coeff, prev_x);
  for (int k = 1; k <= cells; ++k) {
    const double x = -bound + 2.0 * bound * k / cells;
    const double f = eval_poly(coeff, x);
    if (prev_f == 0.0) roots.push_back(prev_x);
    if (prev_f * f < 0.0) {
      double lo = prev_x, hi = x, flo = prev_f;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = eval_poly(coeff, mid);
        if (flo * fmid <= 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fmid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_x = x;
    prev_f = f;
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

}  // namespace

TEST_CASE("tensor_product: identity and projector blocks") {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  CHECK(max_abs_diff(tensor_product(i2, i2), ComplexMatrix::Identity(4, 4)) == 0.0);

  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
  p1(1, 1) = 1.0;
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(1, 1) = 1.0;
  CHECK(max_abs_diff(tensor_product(p0, p1), expected) == 0.0);
}

TEST_CASE("tensor_product: sigma_z (x) sigma_z flips |up,down>") {
  const ComplexMatrix zz = tensor_product(pauli_z(), pauli_z());
  ComplexVector up_down = ComplexVector::Zero(4);
  up_down(1) = 1.0;
  CHECK((zz * up_down + up_down).norm() == 0.0);
}

TEST_CASE("tensor_product: associativity and trace multiplicativity") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = testsupport::random_matrix(rng, 2);
    const ComplexMatrix b = testsupport::random_matrix(rng, 3);
    const ComplexMatrix c = testsupport::random_matrix(rng, 2);
    CHECK(max_abs_diff(tensor_product(tensor_product(a, b), c),
                       tensor_product(a, tensor_product(b, c))) <= 1e-14);
    const Complex lhs = tensor_product(a, b).trace();
    const Complex rhs = a.trace() * b.trace();
    CHECK(std::abs(lhs - rhs) <= 1e-14);
  }
}

TEST_CASE("partial_trace: Bell state reduces to the maximally mixed qubit") {
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const ComplexMatrix rho = bell * bell.adjoint();
  const ComplexMatrix reduced = partial_trace(rho, {2, 2}, 0);
  CHECK(max_abs_diff(reduced, 0.5 * ComplexMatrix::Identity(2, 2)) <= 1e-15);
}

TEST_CASE("partial_trace: product basis state") {
  ComplexVector up_down = ComplexVector::Zero(4);
  up_down(1) = 1.0;
  const ComplexMatrix rho = up_down * up_down.adjoint();
  ComplexMatrix down = ComplexMatrix::Zero(2, 2);
  down(1, 1) = 1.0;
  CHECK(max_abs_diff(partial_trace(rho, {2, 2}, 0), down) == 0.0);
}

TEST_CASE("partial_trace: tracing both slots reproduces the full trace") {
  Rng rng(12);
  const ComplexMatrix m = testsupport::random_matrix(rng, 6);
  const ComplexMatrix first = partial_trace(m, {2, 3}, 0);
  const ComplexMatrix scalar = partial_trace(first, {3}, 0);
  REQUIRE(scalar.rows() == 1);
  CHECK(std::abs(scalar(0, 0) - m.trace()) <= 1e-14);
  CHECK(std::abs(first.trace() - m.trace()) <= 1e-14);
}

TEST_CASE("partial_trace: factor recovery on tensor products") {
  Rng rng(13);
  const ComplexMatrix r1 = testsupport::random_psd(rng, 2);
  const ComplexMatrix r2 = testsupport::random_psd(rng, 3);
  const ComplexMatrix joint = tensor_product(r1, r2);
  CHECK(max_abs_diff(partial_trace(joint, {2, 3}, 0), r1.trace() * r2) <= 1e-13);
  CHECK(max_abs_diff(partial_trace(joint, {2, 3}, 1), r2.trace() * r1) <= 1e-13);
}

TEST_CASE("partial_trace: shape errors") {
  const ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  CHECK_THROWS_AS(partial_trace(m, {2, 3}, 0), InvalidShape);
  CHECK_THROWS_AS(partial_trace(m, {2, 2}, 2), InvalidShape);
  CHECK_THROWS_AS(partial_trace(ComplexMatrix::Zero(2, 3), {2, 3}, 0), InvalidShape);
}

TEST_CASE("hermitian_eigenvalues: diagonal and sigma_x spectra") {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  d(2, 2) = 2.0;
  const RealVector evals = hermitian_eigenvalues(d);
  CHECK(evals(0) == 3.0);
  CHECK(evals(1) == 2.0);
  CHECK(evals(2) == 1.0);

  const RealVector sx = hermitian_eigenvalues(pauli_x());
  CHECK(std::abs(sx(0) - 1.0) <= 1e-14);
  CHECK(std::abs(sx(1) + 1.0) <= 1e-14);
}

TEST_CASE("hermitian_eigenvalues: frozen 2x2 complex case") {
  // [[2, 1-i], [1+i, 0]] has eigenvalues 1 +- sqrt(3).
  ComplexMatrix m(2, 2);
  m << Complex(2, 0), Complex(1, -1), Complex(1, 1), Complex(0, 0);
  const RealVector evals = hermitian_eigenvalues(m);
  CHECK(std::abs(evals(0) - 2.7320508075688772) <= 1e-12);
  CHECK(std::abs(evals(1) + 0.7320508075688772) <= 1e-12);
}

TEST_CASE("hermitian_eigenvalues: matches bisection roots of the characteristic polynomial") {
  Rng rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix h = testsupport::random_hermitian(rng, 4);
    const std::vector<double> roots = bisect_roots(char_poly_coeffs(h));
    REQUIRE(roots.size() == 4);
    const RealVector evals = hermitian_eigenvalues(h);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(evals(i) - roots[i]) <= 1e-10);
  }
}

TEST_CASE("hermitian_eigenvalues: eigenvalue sum equals trace, vectors diagonalize") {
  Rng rng(22);
  const ComplexMatrix h = testsupport::random_hermitian(rng, 8);
  const auto eig = hermitian_eigensystem(h);
  CHECK(std::abs(eig.values.sum() - h.trace().real()) <= 1e-10);
  const ComplexMatrix reassembled =
      eig.vectors * eig.values.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  CHECK(max_abs_diff(reassembled, h) <= 1e-12);
  CHECK(max_abs_diff(eig.vectors.adjoint() * eig.vectors, ComplexMatrix::Identity(8, 8)) <= 1e-12);
}

TEST_CASE("hermitian_eigenvalues: projector spectra lie in {0, 1}") {
  Rng rng(23);
  for (Eigen::Index n : {4, 16}) {
    const ComplexMatrix m = testsupport::random_matrix(rng, n);
    const Eigen::HouseholderQR<ComplexMatrix> qr(m);
    const ComplexMatrix q = qr.householderQ();
    const Eigen::Index rank = n / 2;
    const ComplexMatrix basis = q.leftCols(rank);
    const ComplexMatrix projector = basis * basis.adjoint();
    const RealVector evals = hermitian_eigenvalues(projector);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double dist = std::min(std::abs(evals(i)), std::abs(evals(i) - 1.0));
      CHECK(dist <= 1e-10);
    }
  }
}

TEST_CASE("hermitian_eigenvalues: rejects non-Hermitian input") {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigenvalues(m), NotHermitian);
  CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix::Zero(2, 3)), InvalidShape);
}

TEST_CASE("psd_sqrt: identity and diagonal cases") {
  const ComplexMatrix i4 = ComplexMatrix::Identity(4, 4);
  CHECK(max_abs_diff(psd_sqrt(i4), i4) <= 1e-14);

  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 9.0;
  ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
  expected(0, 0) = 2.0;
  expected(1, 1) = 3.0;
  CHECK(max_abs_diff(psd_sqrt(d), expected) <= 1e-14);
}

TEST_CASE("psd_sqrt: multiply-back on random PSD matrices") {
  Rng rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    const ComplexMatrix m = testsupport::random_psd(rng, 4);
    const ComplexMatrix s = psd_sqrt(m);
    CHECK(is_hermitian(s, 1e-12));
    CHECK(max_abs_diff(s * s, m) <= 1e-10);
  }
}

TEST_CASE("psd_sqrt: iterated root gives fourth roots of the spectrum") {
  Rng rng(32);
  const ComplexMatrix m = testsupport::random_psd(rng, 4);
  const RealVector original = hermitian_eigenvalues(m);
  const RealVector quartic = hermitian_eigenvalues(psd_sqrt(psd_sqrt(m)));
  for (Eigen::Index i = 0; i < 4; ++i)
    CHECK(std::abs(quartic(i) - std::pow(original(i), 0.25)) <= 1e-8);
}

TEST_CASE("psd_sqrt: clamp window and rejection") {
  ComplexMatrix tiny = ComplexMatrix::Zero(2, 2);
  tiny(0, 0) = 1.0;
  tiny(1, 1) = -5e-13;  // inside the clamp window
  const ComplexMatrix s = psd_sqrt(tiny);
  CHECK(std::abs(s(1, 1)) == 0.0);

  ComplexMatrix negative = ComplexMatrix::Zero(2, 2);
  negative(0, 0) = 1.0;
  negative(1, 1) = -1e-6;
  CHECK_THROWS_AS(psd_sqrt(negative), NotPSD);
}

TEST_CASE("singular_values: diagonal, unitary-invariant and rank-deficient cases") {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = 2.0;
  d(1, 1) = -5.0;  // sign lands in the singular value magnitude
  const RealVector plain = singular_values(d);
  CHECK(plain(0) == 5.0);
  CHECK(plain(1) == 2.0);
  CHECK(plain(2) == 0.0);

  Rng rng(33);
  const ComplexMatrix h = testsupport::random_hermitian(rng, 4);
  const RealVector sigma = singular_values(h);
  RealVector expected = hermitian_eigenvalues(h).cwiseAbs();
  std::sort(expected.begin(), expected.end(), std::greater<>());
  for (Eigen::Index i = 0; i < 4; ++i) CHECK(std::abs(sigma(i) - expected(i)) <= 1e-12);

  // A column at roundoff scale must come back at roundoff scale, not at
  // sqrt(roundoff).
  ComplexMatrix nearly_singular = testsupport::random_matrix(rng, 3);
  nearly_singular.col(2) = 1e-16 * nearly_singular.col(0);
  CHECK(singular_values(nearly_singular).minCoeff() <= 1e-15);
}

TEST_CASE("real_expectation: flags imaginary leakage") {
  ComplexMatrix skew = ComplexMatrix::Zero(2, 2);
  skew(0, 0) = Complex(0, 1);
  skew(1, 1) = Complex(0, 1);
  CHECK_THROWS_AS(real_expectation(skew, ComplexMatrix::Identity(2, 2)), ConsistencyError);
  CHECK(real_expectation(pauli_z(), ComplexMatrix::Identity(2, 2)) == 0.0);
}
