#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace physent {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Tolerance ledger. Every matrix in this library is small (at most 64x64)
// with O(1) entries, so absolute thresholds are safe.
inline constexpr double kHermitianTol = 1e-10;      // Hermiticity / PSD checks
inline constexpr double kEigenvalueClamp = 1e-12;   // roundoff clamp on spectra
inline constexpr double kJacobiTarget = 1e-14;      // off-diagonal Frobenius norm
inline constexpr double kUnitNormTol = 1e-12;
inline constexpr double kOrthogonalityTol = 1e-12;
inline constexpr double kImaginaryLeakTol = 1e-10;  // expectation values must be real
inline constexpr double kCoincidenceFloor = 1e-12;  // below this T the post-selection is empty

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidShape : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct NotPSD : Error { using Error::Error; };
struct PauliExclusion : Error { using Error::Error; };
struct AssumptionViolated : Error { using Error::Error; };
struct NoCoincidences : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

// A guarantee that holds in exact arithmetic was violated at runtime;
// indicates a bug rather than bad input.
struct ConsistencyError : Error { using Error::Error; };

}  // namespace physent
