#pragma once

#include "scarf/types.hpp"

namespace scarf {

/// Settings for the direct Schroedinger-equation integration.
struct OracleConfig {
  /// Integration domain is [-L, L]; sech^2(18) < 1e-14, so the well term is
  /// negligible at the default boundary.
  double domain_half_width = 18.0;
  /// Target relative accuracy of the extracted amplitudes. Values below
  /// ~1e-11 saturate double precision.
  double relative_tolerance = 1e-10;
  /// Accepted-step budget per integration pass.
  long max_steps = 2'000'000;
};

/// Amplitudes extracted from one numerical integration.
struct OracleResult {
  Complex t{};
  Complex r{};
  Side side = Side::left;
  /// Plane-wave matching defect: the extracted amplitudes are recomputed at a
  /// refined integrator tolerance and the residual bounds their discrepancy.
  /// An accepted result satisfies residual < 10 * relative_tolerance.
  double residual = 0.0;
  long steps_taken = 0;
  /// Set when |t| > 1e8: the matching degenerates near a spectral
  /// singularity, so the residual gate is not applied.
  bool singular_regime = false;
};

/// Integrates psi'' = (V(x) - k^2) psi across [-L, L] and extracts t and r
/// from the plane-wave decomposition at the exit boundary. Left incidence
/// starts from a unit transmitted wave at +L and integrates backward; right
/// incidence mirrors the procedure. Results are normalized to a unit
/// incoming amplitude.
///
/// Throws DomainError for k < 1e-3, ConvergenceError when the step budget is
/// exhausted and TruncationError when the residual exceeds its bound.
OracleResult scatter_numeric(const ScarfParams& p, WaveNumber k, Side side,
                             const OracleConfig& cfg = {});

/// Certifies the mirror identity V(x, B) = V(-x, -B) and the induced mapping
/// r_right(A, B) = r_left(A, -B): returns the worst potential mismatch over a
/// probe set plus the oracle-level |r_right(p) - r_left(A, -B)|.
double mirror_check(const ScarfParams& p, WaveNumber k, const OracleConfig& cfg = {});

}  // namespace scarf
