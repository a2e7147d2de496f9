#include "physent/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "physent/linalg.hpp"

namespace physent {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

double require_real(const Complex& z, const char* what) {
  if (std::abs(z.imag()) > kImaginaryLeakTol)
    throw ConsistencyError(std::string(what) + ": value is not real");
  return z.real();
}

}  // namespace

RealizedGeometry build_geometry(const SplitterGeometry& g) {
  if (!std::isfinite(g.theta) || !std::isfinite(g.eta) || g.theta < 0.0 ||
      g.theta > kHalfPi + kEigenvalueClamp || g.eta < 0.0 || g.eta > kHalfPi + kEigenvalueClamp)
    throw InvalidParams("build_geometry: angles must lie in [0, pi/2]");

  const double ct = std::cos(g.theta);
  const double st = std::sin(g.theta);
  const double ce = std::cos(g.eta);
  const double se = std::sin(g.eta);

  // Modes (L1, L2, R1, R2). B straddles the same splitter arms as A but is
  // rotated into the orthogonal combination; eta moves its weight into the
  // auxiliary time-bin modes, erasing the projected overlap with A.
  ComplexVector a = ComplexVector::Zero(4);
  a(0) = ct;
  a(2) = st;
  ComplexVector b = ComplexVector::Zero(4);
  b(0) = ce * st;
  b(2) = -ce * ct;
  b(1) = se * st;
  b(3) = -se * ct;

  ComplexMatrix left = ComplexMatrix::Zero(4, 4);
  left(0, 0) = 1.0;
  left(1, 1) = 1.0;
  ComplexMatrix right = ComplexMatrix::Zero(4, 4);
  right(2, 2) = 1.0;
  right(3, 3) = 1.0;

  return RealizedGeometry{ExternalState(a), ExternalState(b),
                          DetectorPair(Detector(left), Detector(right))};
}

SweepPoint evaluate_point(const SplitterGeometry& g, double epsilon, Statistics stats) {
  const RealizedGeometry geometry = build_geometry(g);

  SweepPoint point;
  point.geometry = g;
  point.epsilon = epsilon;
  point.statistics = stats;
  point.weights = coincidence_weights(geometry.detectors, geometry.state_a, geometry.state_b);

  const TwoParticleState psi =
      paradigmatic_state(geometry.state_a, geometry.state_b, epsilon, stats);
  const ComplexMatrix rho_a = density_matrix(psi);
  point.t = coincidence_rate(rho_a, geometry.detectors);

  const ScenarioParams params{point.weights.d_lr, point.weights.d_rl,
                              require_real(point.weights.gamma, "evaluate_point: gamma"),
                              epsilon, exchange_sign(stats)};
  try {
    const DetectorLevelState rho_d = reconstruct(rho_a, geometry.detectors);
    const DetectorLevelState oracle_rho = closed_form_rho_d(params);
    point.pipeline = measure_report(rho_d, point.t);
    point.oracle = closed_form_measures(params);
    point.oracle_delta_max = max_abs_diff(rho_d.rho(), oracle_rho.rho());
    point.status = PointStatus::Ok;
  } catch (const NoCoincidences&) {
    point.status = PointStatus::NoCoincidences;
    point.pipeline.reset();
    point.oracle.reset();
    point.oracle_delta_max = std::numeric_limits<double>::quiet_NaN();
  }
  return point;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 2) throw InvalidParams("linear_grid: need at least 2 points");
  if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo)
    throw InvalidParams("linear_grid: bad range");
  std::vector<double> grid(points);
  for (int k = 0; k < points; ++k)
    grid[k] = lo + (hi - lo) * static_cast<double>(k) / (points - 1);
  return grid;
}

std::vector<SweepPoint> epsilon_sweep(double gamma_fraction, Statistics stats,
                                      const std::vector<double>& grid) {
  if (!(gamma_fraction >= 0.0 && gamma_fraction <= 1.0))
    throw InvalidParams("epsilon_sweep: gamma_fraction must lie in [0, 1]");
  if (grid.empty()) throw InvalidParams("epsilon_sweep: empty grid");
  const SplitterGeometry geometry{std::numbers::pi / 4.0, std::acos(std::sqrt(gamma_fraction))};
  std::vector<SweepPoint> points;
  points.reserve(grid.size());
  for (double epsilon : grid) points.push_back(evaluate_point(geometry, epsilon, stats));
  return points;
}

std::vector<SweepPoint> dlr_sweep(const std::vector<double>& epsilons, Statistics stats,
                                  const std::vector<double>& grid) {
  if (epsilons.empty()) throw InvalidParams("dlr_sweep: empty epsilon list");
  if (grid.empty()) throw InvalidParams("dlr_sweep: empty grid");
  for (double d : grid)
    if (!(d >= 0.0 && d <= 0.25 + kEigenvalueClamp))
      throw InvalidParams("dlr_sweep: d_lr must lie in [0, 1/4]");
  std::vector<SweepPoint> points;
  points.reserve(epsilons.size() * grid.size());
  for (double epsilon : epsilons)
    for (double d : grid) {
      const SplitterGeometry geometry{std::acos(std::pow(d, 0.25)), 0.0};
      points.push_back(evaluate_point(geometry, epsilon, stats));
    }
  return points;
}

}  // namespace physent
