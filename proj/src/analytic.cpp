#include "scarf/analytic.hpp"

#include <array>
#include <cmath>

#include "scarf/special_functions.hpp"

namespace scarf {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Numerator Gamma arguments must stay this far from a pole.
constexpr double kPoleTolerance = 1e-9;

// exp() overflows near 709; leave headroom for the squared moduli.
constexpr double kLogAmplitudeBound = 700.0;

std::array<Complex, 4> numerator_arguments(const ScarfParams& p, double k) {
  const Complex ik(0.0, k);
  return {-p.A - ik, 1.0 + p.A - ik, 0.5 + p.B - ik, 0.5 - p.B - ik};
}

Complex reflection_bracket(const ScarfParams& p, double k, ReflectionConvention convention) {
  Complex sb, cb;
  if (convention == ReflectionConvention::as_published) {
    sb = sin_pi(p.B);
    cb = cos_pi(p.B);
  } else {
    sb = std::sinh(kPi * p.B);
    cb = std::cosh(kPi * p.B);
  }
  return cos_pi(p.A) * sb / std::cosh(kPi * k) + sin_pi(p.A) * cb / std::sinh(kPi * k);
}

}  // namespace

Complex potential_value(const ScarfParams& p, double x) {
  const double sech = 1.0 / std::cosh(x);
  const Complex well = -(p.B * p.B + p.A * p.A + p.A) * (sech * sech);
  const Complex ramp = Complex(0.0, 1.0) * p.B * (2.0 * p.A + 1.0) * (std::tanh(x) * sech);
  return well + ramp;
}

Complex transmission_amplitude(const ScarfParams& p, WaveNumber k) {
  const double kv = k.value();
  const auto num = numerator_arguments(p, kv);
  for (const Complex& z : num) {
    if (gamma_pole_distance(z) < kPoleTolerance) {
      throw SingularityError("transmission_amplitude: numerator Gamma argument at a pole (k = " +
                             std::to_string(kv) + ")");
    }
  }
  const Complex ik(0.0, kv);
  Complex log_t = log_gamma(num[0]) + log_gamma(num[1]) + log_gamma(num[2]) + log_gamma(num[3]);
  log_t -= log_gamma(-ik) + log_gamma(1.0 - ik) + 2.0 * log_gamma(0.5 - ik);
  if (std::abs(log_t.real()) > kLogAmplitudeBound) {
    throw OverflowError("transmission_amplitude: |log t| = " + std::to_string(log_t.real()) +
                        " exceeds the exponentiation bound");
  }
  return std::exp(log_t);
}

Complex reflection_amplitude(const ScarfParams& p, WaveNumber k, Side side,
                             ReflectionConvention convention) {
  const ScarfParams effective = (side == Side::left) ? p : p.mirrored();
  const Complex t = transmission_amplitude(effective, k);
  return t * Complex(0.0, 1.0) * reflection_bracket(effective, k.value(), convention);
}

ScatteringAmplitudes amplitudes(const ScarfParams& p, WaveNumber k) {
  // t is even in B, so one evaluation covers both directions.
  const Complex t = transmission_amplitude(p, k);
  const Complex i(0.0, 1.0);
  ScatteringAmplitudes out;
  out.t = t;
  out.r_left = t * i * reflection_bracket(p, k.value(), ReflectionConvention::as_published);
  out.r_right = t * i * reflection_bracket(p.mirrored(), k.value(), ReflectionConvention::as_published);
  out.k = k.value();
  return out;
}

double transmitivity_closed_form(const ScarfParams& p, WaveNumber k) {
  if (!p.is_real()) {
    throw DomainError("transmitivity_closed_form: requires real A and B");
  }
  const double s2 = std::pow(std::sinh(kPi * k.value()), 2);
  const double c2 = std::pow(std::cosh(kPi * k.value()), 2);
  const double sa = sin_pi(p.A).real();
  const double cb = cos_pi(p.B).real();
  const double value = s2 * c2 / ((s2 + sa * sa) * (s2 + cb * cb));
  if (!(value >= 0.0)) {
    throw std::logic_error("transmitivity_closed_form: negative T, formula transcription bug");
  }
  return value;
}

Coefficients coefficients(const ScarfParams& p, WaveNumber k) {
  const ScatteringAmplitudes amp = amplitudes(p, k);
  return {amp.transmitivity(), amp.reflectivity_left(), amp.reflectivity_right()};
}

}  // namespace scarf
