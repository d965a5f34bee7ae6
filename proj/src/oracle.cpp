#include "scarf/oracle.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>

#include "scarf/analytic.hpp"

namespace scarf {
namespace {

namespace ode = boost::numeric::odeint;

using State = std::array<Complex, 2>;  // (psi, psi')

constexpr double kMinWaveNumber = 1e-3;
constexpr double kSingularModulus = 1e8;
constexpr double kResidualSafety = 3.0;
constexpr double kResidualFloor = 5e-14;

struct Extracted {
  Complex t;
  Complex r;
  long steps;
};

// One adaptive pass from x0 to x1 at the given local tolerance.
State integrate_pass(const ScarfParams& p, double energy, double x0, double x1, State y,
                     double eps, long max_steps, long& steps_taken) {
  auto rhs = [&p, energy](const State& s, State& ds, double x) {
    ds[0] = s[1];
    ds[1] = (potential_value(p, x) - energy) * s[0];
  };
  auto stepper = ode::make_controlled<ode::runge_kutta_dopri5<State>>(1e-3 * eps, eps);
  const double direction = (x1 > x0) ? 1.0 : -1.0;
  double x = x0;
  double h = direction * 0.01;
  long attempts = 0;
  long accepted = 0;
  while (direction * (x1 - x) > 0.0) {
    if (direction * (x + h - x1) > 0.0) h = x1 - x;
    if (++attempts > 4 * max_steps) {
      throw ConvergenceError("scatter_numeric: step budget exhausted (attempts)");
    }
    if (stepper.try_step(rhs, y, x, h) == ode::success) {
      if (++accepted > max_steps) {
        throw ConvergenceError("scatter_numeric: step budget exhausted");
      }
    }
  }
  steps_taken += accepted;
  return y;
}

// Solves the 2x2 plane-wave system at the exit boundary and returns t = 1/a,
// r = b/a for incoming amplitude a and reflected amplitude b.
Extracted extract(const ScarfParams& p, double k, Side side, double L, double eps,
                  long max_steps) {
  const Complex ik(0.0, k);
  const Complex phase = std::exp(ik * L);
  long steps = 0;
  State y;
  Complex a, b;
  if (side == Side::left) {
    y = {phase, ik * phase};  // unit transmitted wave e^{ikx} at +L
    y = integrate_pass(p, k * k, L, -L, y, eps, max_steps, steps);
    a = phase * (y[0] + y[1] / ik) * 0.5;
    b = (y[0] - y[1] / ik) * 0.5 / phase;
  } else {
    y = {phase, -ik * phase};  // unit transmitted wave e^{-ikx} at -L
    y = integrate_pass(p, k * k, -L, L, y, eps, max_steps, steps);
    a = phase * (y[0] - y[1] / ik) * 0.5;
    b = (y[0] + y[1] / ik) * 0.5 / phase;
  }
  return {1.0 / a, b / a, steps};
}

}  // namespace

OracleResult scatter_numeric(const ScarfParams& p, WaveNumber k, Side side,
                             const OracleConfig& cfg) {
  if (k.value() < kMinWaveNumber) {
    throw DomainError("scatter_numeric: k below 1e-3");
  }
  if (cfg.domain_half_width <= 0.0 || cfg.relative_tolerance <= 0.0 || cfg.max_steps <= 0) {
    throw DomainError("scatter_numeric: invalid OracleConfig");
  }
  // The residual is measured against a refinement of the integrator
  // tolerance, so the working tolerance sits well below the requested one.
  const double eps = std::max(0.05 * cfg.relative_tolerance, 2e-14);
  const Extracted coarse =
      extract(p, k.value(), side, cfg.domain_half_width, eps, cfg.max_steps);
  const Extracted fine =
      extract(p, k.value(), side, cfg.domain_half_width, 0.5 * eps, cfg.max_steps);

  OracleResult result;
  result.t = fine.t;
  result.r = fine.r;
  result.side = side;
  result.steps_taken = coarse.steps + fine.steps;
  const double dt = std::abs(coarse.t - fine.t) / (1.0 + std::abs(fine.t));
  const double dr = std::abs(coarse.r - fine.r) / (1.0 + std::abs(fine.r));
  result.residual = kResidualSafety * std::max(dt, dr) + kResidualFloor;
  result.singular_regime = std::abs(result.t) > kSingularModulus;
  if (!result.singular_regime && result.residual >= 10.0 * cfg.relative_tolerance) {
    throw TruncationError("scatter_numeric: residual " + std::to_string(result.residual) +
                          " above bound");
  }
  return result;
}

double mirror_check(const ScarfParams& p, WaveNumber k, const OracleConfig& cfg) {
  double potential_defect = 0.0;
  for (int i = 0; i <= 48; ++i) {
    const double x = -6.0 + 0.25 * i;
    potential_defect = std::max(
        potential_defect, std::abs(potential_value(p, x) - potential_value(p.mirrored(), -x)));
  }
  const OracleResult right = scatter_numeric(p, k, Side::right, cfg);
  const OracleResult mirrored_left = scatter_numeric(p.mirrored(), k, Side::left, cfg);
  return potential_defect + std::abs(right.r - mirrored_left.r);
}

}  // namespace scarf
