#include "scarf/regimes.hpp"

#include <algorithm>
#include <cmath>

#include "scarf/analytic.hpp"
#include "scarf/special_functions.hpp"

namespace scarf {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kMinWaveNumber = 1e-3;

bool near_integer(double x, double tol) { return std::fabs(x - std::nearbyint(x)) < tol; }

bool near_half_integer(double x, double tol) { return near_integer(x - 0.5, tol); }

}  // namespace

std::string to_string(RegimeFlag flag) {
  switch (flag) {
    case RegimeFlag::unitary_case1: return "unitary_case1";
    case RegimeFlag::unitary_case2: return "unitary_case2";
    case RegimeFlag::reciprocal: return "reciprocal";
    case RegimeFlag::invisible: return "invisible";
    case RegimeFlag::anomalous: return "anomalous";
    case RegimeFlag::pseudo_unitary: return "pseudo_unitary";
    case RegimeFlag::generic_handed: return "generic_handed";
  }
  return "unknown";
}

std::vector<WaveNumber> make_k_grid(double lo, double hi, int count) {
  if (count < 1 || lo > hi) {
    throw DomainError("make_k_grid: need count >= 1 and lo <= hi");
  }
  std::vector<WaveNumber> grid;
  grid.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double k = (count == 1) ? lo : lo + i * (hi - lo) / (count - 1);
    grid.emplace_back(std::max(k, kMinWaveNumber));
  }
  return grid;
}

RegimeReport classify(const ScarfParams& p, const std::vector<WaveNumber>& k_grid,
                      const ClassifyTolerances& tol) {
  if (k_grid.empty()) {
    throw DomainError("classify: empty k grid");
  }
  RegimeReport report;
  report.params = p;
  report.k_grid = k_grid;

  double unitarity = 0.0;
  double reciprocity = 0.0;
  double invisibility = 0.0;
  double excess_T = -1.0;  // max of T - 1 over the grid
  double pseudo = 0.0;
  for (const WaveNumber& k : k_grid) {
    const Coefficients c = coefficients(p, k);
    unitarity = std::max(unitarity, std::fabs(c.R_left + c.T - 1.0));
    reciprocity = std::max(reciprocity, std::fabs(c.R_left - c.R_right));
    invisibility = std::max({invisibility, c.R_left, c.R_right, std::fabs(c.T - 1.0)});
    excess_T = std::max(excess_T, c.T - 1.0);
    pseudo = std::max(pseudo, std::fabs(c.T + std::sqrt(c.R_left * c.R_right) - 1.0));
  }

  auto set_flag = [&report](RegimeFlag flag, double residual) {
    report.flags.insert(flag);
    report.residuals[flag] = residual;
  };

  const bool real = p.is_real();
  if (real && near_half_integer(p.A.real(), tol.snap)) {
    set_flag(RegimeFlag::unitary_case1, unitarity);
  }
  if (real && near_integer(p.B.real(), tol.snap)) {
    set_flag(RegimeFlag::unitary_case2, unitarity);
  }
  const bool invisible_lattice =
      real && ((near_half_integer(p.A.real(), tol.snap) && near_half_integer(p.B.real(), tol.snap)) ||
               (near_integer(p.A.real(), tol.snap) && near_integer(p.B.real(), tol.snap)));
  if (invisible_lattice) {
    set_flag(RegimeFlag::invisible, invisibility);
  }
  const bool anomalous = excess_T > tol.residual;
  if (anomalous) {
    set_flag(RegimeFlag::anomalous, excess_T);
  }
  // The pseudo-unitarity relation only holds while T stays normal; the
  // defect is still recorded for anomalous points.
  if (!anomalous && pseudo < tol.residual) {
    set_flag(RegimeFlag::pseudo_unitary, pseudo);
  }
  report.residuals[RegimeFlag::pseudo_unitary] = pseudo;
  if (reciprocity < tol.residual) {
    set_flag(RegimeFlag::reciprocal, reciprocity);
  } else {
    set_flag(RegimeFlag::generic_handed, reciprocity);
  }
  return report;
}

SingularityScanResult singularity_scan(const SingularityParams& s, double k_lo, double k_hi,
                                       int samples) {
  if (samples < 3 || k_lo > k_hi) {
    throw DomainError("singularity_scan: need samples >= 3 and k_lo <= k_hi");
  }
  const ScarfParams p = s.params();
  SingularityScanResult result;
  result.peak_T = -1.0;
  for (int i = 0; i < samples; ++i) {
    const double k = std::max(k_lo + i * (k_hi - k_lo) / (samples - 1), kMinWaveNumber);
    double T;
    try {
      T = std::norm(transmission_amplitude(p, WaveNumber(k)));
    } catch (const SingularityError&) {
      T = kSingularitySentinel;
      // The divergence comes from the 1/2 + B - ik argument reaching -n.
      if (gamma_pole_distance(0.5 + p.B - Complex(0.0, k)) < 1e-9) {
        result.pole_confirmed = true;
        result.pole_k = k;
      }
    } catch (const OverflowError&) {
      T = kSingularitySentinel;
    }
    if (T > result.peak_T) {
      result.peak_T = T;
      result.k_star = k;
    }
  }
  return result;
}

UnitaryCoefficients unitary_closed_forms(const ScarfParams& p, WaveNumber k, double snap_tol) {
  if (!p.is_real()) {
    throw DomainError("unitary_closed_forms: requires real A and B");
  }
  const double s2 = std::pow(std::sinh(kPi * k.value()), 2);
  UnitaryCoefficients out;
  if (near_half_integer(p.A.real(), snap_tol)) {  // Case 1
    const double cb = cos_pi(p.B).real();
    out.R = cb * cb / (s2 + cb * cb);
    out.T = s2 / (s2 + cb * cb);
  } else if (near_integer(p.B.real(), snap_tol)) {  // Case 2
    const double sa = sin_pi(p.A).real();
    out.R = sa * sa / (s2 + sa * sa);
    out.T = s2 / (s2 + sa * sa);
  } else {
    throw DomainError("unitary_closed_forms: parameters match neither unitary case");
  }
  return out;
}

}  // namespace scarf
