#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "physent/closed_form.hpp"

namespace physent {

// Beam-splitter realization of a detector pair and two orthogonal external
// states. The external space has four modes (L1, L2, R1, R2): one primary
// and one auxiliary (time-bin) mode per detector side.
//   theta biases the splitter:      d_lr = cos^4(theta), d_rl = sin^4(theta)
//   eta delays particle B into the auxiliary modes: gamma = -cos^2(eta) gamma_max
struct SplitterGeometry {
  double theta = 0;  // in [0, pi/2]
  double eta = 0;    // in [0, pi/2]
};

struct RealizedGeometry {
  ExternalState state_a;
  ExternalState state_b;
  DetectorPair detectors;
};

RealizedGeometry build_geometry(const SplitterGeometry& g);

enum class PointStatus { Ok, NoCoincidences };

inline const char* status_name(PointStatus s) {
  return s == PointStatus::Ok ? "ok" : "no_coincidences";
}

// One evaluated parameter point: full pipeline plus closed-form cross-check.
// Bunched-away points (T below the post-selection floor) keep their rate and
// status but have no reports.
struct SweepPoint {
  SplitterGeometry geometry;
  double epsilon = 0;
  Statistics statistics = Statistics::Boson;
  CoincidenceWeights weights;
  double t = 0;
  PointStatus status = PointStatus::Ok;
  std::optional<MeasureReport> pipeline;
  std::optional<MeasureReport> oracle;
  double oracle_delta_max = std::numeric_limits<double>::quiet_NaN();
};

SweepPoint evaluate_point(const SplitterGeometry& g, double epsilon, Statistics stats);

// Uniform grid with both endpoints, at least 2 points.
std::vector<double> linear_grid(double lo, double hi, int points);

// Balanced detectors (theta = pi/4) with |gamma| / gamma_max fixed to
// gamma_fraction, epsilon swept over the grid.
std::vector<SweepPoint> epsilon_sweep(double gamma_fraction, Statistics stats,
                                      const std::vector<double>& grid);

// Full indistinguishability (eta = 0), detector bias swept via d_lr in
// [0, 1/4] with d_rl = (1 - sqrt(d_lr))^2; one pass per epsilon, grid order
// within each pass.
std::vector<SweepPoint> dlr_sweep(const std::vector<double>& epsilons, Statistics stats,
                                  const std::vector<double>& grid);

}  // namespace physent
