#include "scarf/special_functions.hpp"

#include <cmath>

namespace scarf {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLogPi = 1.144729885849400174143427351353058712;
constexpr double kHalfLog2Pi = 0.918938533204672741780329736405617640;

// Lanczos coefficients for g = 607/128, 15 terms (Godfrey's set).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// Valid for Re(z) >= 0.5.
Complex lanczos_log_gamma(const Complex& z) {
  Complex series(kLanczosCoeff[0], 0.0);
  for (int i = 1; i < 15; ++i) {
    series += kLanczosCoeff[i] / (z - 1.0 + static_cast<double>(i));
  }
  const Complex t = z + (kLanczosG - 0.5);
  return kHalfLog2Pi + (z - 0.5) * std::log(t) - t + std::log(series);
}

// Splits Re(z) as m + f with integer m and |f| <= 0.5.
double reduce_half(double x, double& f) {
  const double m = std::nearbyint(x);
  f = x - m;
  return m;
}

bool is_odd_integer(double m) { return std::fmod(std::fabs(m), 2.0) == 1.0; }

// sin(pi f) and cos(pi f) for |f| <= 0.5, exact at f = 0 and f = +/-0.5.
void sincos_pi_reduced(double f, double& s, double& c) {
  if (f == 0.0) {
    s = 0.0;
    c = 1.0;
  } else if (f == 0.5) {
    s = 1.0;
    c = 0.0;
  } else if (f == -0.5) {
    s = -1.0;
    c = 0.0;
  } else {
    s = std::sin(kPi * f);
    c = std::cos(kPi * f);
  }
}

Complex log1p_complex(const Complex& w) {
  if (std::abs(w) < 1e-8) {
    return w * (1.0 - 0.5 * w);
  }
  return std::log(1.0 + w);
}

}  // namespace

double gamma_pole_distance(const Complex& z) noexcept {
  double nearest = std::nearbyint(z.real());
  if (nearest > 0.0) nearest = 0.0;
  return std::hypot(z.real() - nearest, z.imag());
}

Complex sin_pi(const Complex& z) {
  double f = 0.0;
  const double m = reduce_half(z.real(), f);
  double s = 0.0, c = 0.0;
  sincos_pi_reduced(f, s, c);
  const double y = kPi * z.imag();
  Complex value(s * std::cosh(y), c * std::sinh(y));
  return is_odd_integer(m) ? -value : value;
}

Complex cos_pi(const Complex& z) {
  double f = 0.0;
  const double m = reduce_half(z.real(), f);
  double s = 0.0, c = 0.0;
  sincos_pi_reduced(f, s, c);
  const double y = kPi * z.imag();
  Complex value(c * std::cosh(y), -s * std::sinh(y));
  return is_odd_integer(m) ? -value : value;
}

Complex log_sin_pi(const Complex& z) {
  const double y = z.imag();
  if (y < 0.0) {
    return std::conj(log_sin_pi(std::conj(z)));
  }
  if (y == 0.0) {
    const Complex s = sin_pi(z);
    return Complex(std::log(std::abs(s.real())), s.real() < 0.0 ? kPi : 0.0);
  }
  // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}), |e^{2 i pi z}| < 1 above
  // the real axis. The phase of e^{2 i pi z} uses the reduced real part.
  double f = 0.0;
  reduce_half(z.real(), f);
  const double decay = std::exp(-2.0 * kPi * y);
  const Complex q(decay * std::cos(2.0 * kPi * f), decay * std::sin(2.0 * kPi * f));
  const Complex log_half_i(-0.6931471805599453094172321214581766, 0.5 * kPi);
  return log_half_i + Complex(kPi * y, -kPi * z.real()) + log1p_complex(-q);
}

Complex log_gamma(const Complex& z) {
  if (gamma_pole_distance(z) < 1e-12) {
    throw PoleError("log_gamma: argument within 1e-12 of a non-positive integer pole");
  }
  if (z.real() >= 0.5) {
    return lanczos_log_gamma(z);
  }
  // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z).
  return kLogPi - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
}

}  // namespace scarf
