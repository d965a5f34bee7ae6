#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace scarf {

using Complex = std::complex<double>;

/// Incidence direction of the scattered wave.
enum class Side { left, right };

inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

/// Raised when a Gamma argument sits on (or within 1e-12 of) a non-positive
/// integer pole.
class PoleError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised by the amplitude engine when a numerator Gamma argument is at a
/// pole, i.e. a spectral-singularity candidate at this wave number.
class SingularityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when |log t| exceeds the representable range of a double.
class OverflowError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised on inputs outside an operation's domain (non-real parameters,
/// non-positive wave numbers, ...).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when the ODE integrator exhausts its step budget.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when an extracted scattering result fails its residual bound.
class TruncationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parameter pair (A, B) of the complex Scarf II potential
///   V(x) = -(B^2 + A^2 + A) sech^2 x + i B (2A + 1) tanh x sech x.
struct ScarfParams {
  Complex A{};
  Complex B{};

  bool is_real() const { return A.imag() == 0.0 && B.imag() == 0.0; }

  /// Parameters of the mirrored potential, V(x, B) = V(-x, -B).
  ScarfParams mirrored() const { return {A, -B}; }
};

/// Positive wave number k with E = k^2 (units 2*mu = hbar^2 = 1).
/// k = 0 is excluded: the reflection amplitude carries a 1/sinh(pi k) factor.
class WaveNumber {
public:
  explicit WaveNumber(double k) : k_(k) {
    if (!(k > 0.0)) {
      throw DomainError("WaveNumber: k must be > 0, got " + std::to_string(k));
    }
  }

  double value() const { return k_; }
  double energy() const { return k_ * k_; }

private:
  double k_;
};

/// Closed-form scattering amplitudes at one wave number.
struct ScatteringAmplitudes {
  Complex t{};
  Complex r_left{};
  Complex r_right{};
  double k = 0.0;

  double transmitivity() const { return std::norm(t); }
  double reflectivity_left() const { return std::norm(r_left); }
  double reflectivity_right() const { return std::norm(r_right); }
};

}  // namespace scarf
