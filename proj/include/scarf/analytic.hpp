#pragma once

#include "scarf/types.hpp"

namespace scarf {

/// Which trigonometric convention the reflection bracket uses. The published
/// formula carries sin(pi B) / cos(pi B); `hyperbolic_variant` substitutes
/// sinh(pi B) / cosh(pi B) and exists for numerical comparison only.
enum class ReflectionConvention { as_published, hyperbolic_variant };

/// V(x) = -(B^2 + A^2 + A) sech^2 x + i B (2A + 1) tanh x sech x.
Complex potential_value(const ScarfParams& p, double x);

/// Transmission amplitude
///   t(k) = G(-A-ik) G(1+A-ik) G(1/2+B-ik) G(1/2-B-ik)
///          / [G(-ik) G(1-ik) G(1/2-ik)^2],
/// evaluated through log-Gamma sums and exponentiated once. Identical for
/// both incidence directions.
///
/// Throws SingularityError when a numerator Gamma argument is within 1e-9 of
/// a pole (spectral-singularity candidate) and OverflowError when |Re log t|
/// exceeds the double-exponent budget.
Complex transmission_amplitude(const ScarfParams& p, WaveNumber k);

/// Reflection amplitude r(k) = t(k) * i * [cos(pi A) sin(pi B) / cosh(pi k)
/// + sin(pi A) cos(pi B) / sinh(pi k)]; right incidence maps to B -> -B.
Complex reflection_amplitude(const ScarfParams& p, WaveNumber k, Side side,
                             ReflectionConvention convention = ReflectionConvention::as_published);

/// t, r_left and r_right at one wave number, sharing one t evaluation.
ScatteringAmplitudes amplitudes(const ScarfParams& p, WaveNumber k);

/// Closed-form transmitivity for real parameters,
///   T(k) = sinh^2(pi k) cosh^2(pi k)
///          / [(sinh^2 pi k + sin^2 pi A)(sinh^2 pi k + cos^2 pi B)].
/// Throws DomainError unless p.is_real().
double transmitivity_closed_form(const ScarfParams& p, WaveNumber k);

struct Coefficients {
  double T = 0.0;
  double R_left = 0.0;
  double R_right = 0.0;
};

/// Squared moduli of the three amplitudes.
Coefficients coefficients(const ScarfParams& p, WaveNumber k);

}  // namespace scarf
