#pragma once

#include "scarf/types.hpp"

namespace scarf {

/// Principal-branch log-Gamma for complex arguments.
///
/// Evaluated with a fixed-coefficient rational (Lanczos) approximation for
/// Re(z) >= 0.5 and the reflection identity Gamma(z) Gamma(1-z) = pi/sin(pi z)
/// for Re(z) < 0.5. The imaginary part is continuous throughout Re(z) > 0 and
/// on each open half-plane Im(z) != 0; exp(log_gamma(z)) reproduces Gamma(z)
/// to better than 1e-12 relative for |z| <= 50.
///
/// Throws PoleError when z lies within 1e-12 of a non-positive integer.
Complex log_gamma(const Complex& z);

/// Distance from z to the nearest non-positive integer (0 exactly at a pole).
double gamma_pole_distance(const Complex& z) noexcept;

/// sin(pi z) and cos(pi z) with the real part of z reduced modulo 1 before
/// multiplication by pi, so integer and half-integer arguments map to exact
/// zeros and units.
Complex sin_pi(const Complex& z);
Complex cos_pi(const Complex& z);

/// log(sin(pi z)), stable for large |Im z| where sin(pi z) itself overflows.
/// Continuous on each half-plane Im(z) > 0 and Im(z) < 0, with
/// log_sin_pi(conj(z)) == conj(log_sin_pi(z)).
Complex log_sin_pi(const Complex& z);

}  // namespace scarf
