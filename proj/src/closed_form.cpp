#include "physent/closed_form.hpp"

#include <algorithm>
#include <cmath>

#include "physent/linalg.hpp"

namespace physent {

void validate(const ScenarioParams& p) {
  if (!std::isfinite(p.d_lr) || !std::isfinite(p.d_rl) || !std::isfinite(p.gamma) ||
      !std::isfinite(p.epsilon))
    throw InvalidParams("ScenarioParams: fields must be finite");
  if (p.d_lr < 0.0 || p.d_lr > 1.0 || p.d_rl < 0.0 || p.d_rl > 1.0)
    throw InvalidParams("ScenarioParams: coincidence weights must lie in [0, 1]");
  if (p.delta != 1 && p.delta != -1)
    throw InvalidParams("ScenarioParams: delta must be +1 or -1");
  if (std::abs(p.gamma) > std::sqrt(p.d_lr * p.d_rl) + kEigenvalueClamp)
    throw InvalidParams("ScenarioParams: |gamma| exceeds sqrt(d_lr * d_rl)");
}

double closed_form_T(const ScenarioParams& p) {
  validate(p);
  const double t =
      p.d_lr + p.d_rl + 4.0 * p.delta * p.gamma * std::cos(p.epsilon) * std::sin(p.epsilon);
  // |gamma| <= gamma_max gives T >= (sqrt(d_lr) - sqrt(d_rl))^2 >= 0.
  if (t < -kEigenvalueClamp)
    throw ConsistencyError("closed_form_T: negative rate for valid parameters");
  return std::max(t, 0.0);
}

namespace {

struct XForm {
  double t = 0;
  double a = 0;
  double b = 0;
};

XForm x_form(const ScenarioParams& p) {
  const double t = closed_form_T(p);
  if (!(t > kCoincidenceFloor))
    throw NoCoincidences("closed form: coincidence rate is below the post-selection floor");
  const double a = (p.d_lr - p.d_rl) * std::cos(2.0 * p.epsilon);
  const double b = 2.0 * p.delta * p.gamma +
                   2.0 * (p.d_lr + p.d_rl) * std::sin(p.epsilon) * std::cos(p.epsilon);
  // a^2 + b^2 <= T^2 holds for every tuple passing validate(); equality marks
  // the pure states.
  if (a * a + b * b > t * t + kEigenvalueClamp)
    throw InvalidParams("closed form: parameters do not yield a positive matrix");
  return {t, a, b};
}

}  // namespace

DetectorLevelState closed_form_rho_d(const ScenarioParams& p) {
  const XForm x = x_form(p);
  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  rho(1, 1) = (x.t + x.a) / (2.0 * x.t);
  rho(1, 2) = x.b / (2.0 * x.t);
  rho(2, 1) = x.b / (2.0 * x.t);
  rho(2, 2) = (x.t - x.a) / (2.0 * x.t);
  return DetectorLevelState(std::move(rho));
}

MeasureReport closed_form_measures(const ScenarioParams& p) {
  const XForm x = x_form(p);
  MeasureReport report;
  report.t = x.t;
  report.c_d = std::abs(x.b) / x.t;
  report.p_d = std::abs(x.a) / x.t;
  report.s_d = linear_entropy(closed_form_rho_d(p));
  report.residual =
      1.0 - report.c_d * report.c_d - report.p_d * report.p_d - 2.0 * report.s_d;
  return report;
}

}  // namespace physent
