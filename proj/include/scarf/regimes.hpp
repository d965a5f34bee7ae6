#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "scarf/types.hpp"

namespace scarf {

enum class RegimeFlag {
  unitary_case1,   // A = n + 1/2, B real: R + T = 1
  unitary_case2,   // B integer, A real: R + T = 1
  reciprocal,      // R_left = R_right across the grid
  invisible,       // R = 0, T = 1 from both sides
  anomalous,       // T > 1 somewhere on the grid
  pseudo_unitary,  // T + sqrt(R_left R_right) = 1 with normal T
  generic_handed,  // R_left != R_right
};

std::string to_string(RegimeFlag flag);

struct ClassifyTolerances {
  /// Absolute tolerance for snapping A, B to integer / half-integer lattices.
  double snap = 1e-9;
  /// Bound for residual-based flags.
  double residual = 1e-8;
};

/// Classification of one parameter point over a k grid. Every set flag has an
/// entry in `residuals` with its worst-case defect over the grid; the
/// pseudo-unitarity defect is recorded even when the flag is not set.
struct RegimeReport {
  ScarfParams params;
  std::vector<WaveNumber> k_grid;
  std::set<RegimeFlag> flags;
  std::map<RegimeFlag, double> residuals;

  bool has(RegimeFlag flag) const { return flags.count(flag) != 0; }
};

RegimeReport classify(const ScarfParams& p, const std::vector<WaveNumber>& k_grid,
                      const ClassifyTolerances& tol = {});

/// k grid helper: `count` points spanning [lo, hi], clamped to k >= 1e-3.
std::vector<WaveNumber> make_k_grid(double lo, double hi, int count);

/// Parameter family A = -(n+1) - i alpha, B = i alpha - (n + 1/2) exhibiting
/// a spectral singularity at E = alpha^2.
struct SingularityParams {
  int n = 0;          // n >= 0
  double alpha = 1.0; // alpha > 0

  ScarfParams params() const {
    return {Complex(-(n + 1.0), -alpha), Complex(-(n + 0.5), alpha)};
  }
};

/// Result of sampling T over a k window around the expected singularity.
/// When a sample lands on the Gamma pole of the 1/2 + B - ik numerator
/// argument, peak_T is reported as the capped sentinel and the pole location
/// is confirmed.
struct SingularityScanResult {
  double k_star = 0.0;
  double peak_T = 0.0;
  bool pole_confirmed = false;
  double pole_k = 0.0;
};

/// Sentinel reported for peak_T when a sample sits on the pole itself.
inline constexpr double kSingularitySentinel = 1e18;

SingularityScanResult singularity_scan(const SingularityParams& s, double k_lo, double k_hi,
                                       int samples);

struct UnitaryCoefficients {
  double R = 0.0;
  double T = 0.0;
};

/// Closed-form (R, T) for the two unitary cases:
///   Case 1 (A = n + 1/2):  R = cos^2(pi B) / (sinh^2(pi k) + cos^2(pi B)),
///   Case 2 (B integer):    R = sin^2(pi A) / (sinh^2(pi k) + sin^2(pi A)),
/// each with T = 1 - R. Throws DomainError outside both cases.
UnitaryCoefficients unitary_closed_forms(const ScarfParams& p, WaveNumber k,
                                         double snap_tol = 1e-9);

}  // namespace scarf
