#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "scarf/analytic.hpp"
#include "scarf/types.hpp"

using scarf::Complex;
using scarf::ScarfParams;
using scarf::WaveNumber;

namespace {

const std::vector<double> param_grid = {-1.3, -0.5, 0.0, 0.3, 0.5, 1.0, 1.7};
const std::vector<double> k_grid = {0.1, 0.5, 1.0, 2.0};

}  // namespace

TEST_CASE("WaveNumber domain and energy") {
  CHECK_THROWS_AS(WaveNumber(0.0), scarf::DomainError);
  CHECK_THROWS_AS(WaveNumber(-1.0), scarf::DomainError);
  WaveNumber k(1.3);
  CHECK(k.value() == 1.3);
  CHECK(k.energy() == doctest::Approx(1.69).epsilon(1e-15));
}

TEST_CASE("potential value and symmetries") {
  CHECK(scarf::potential_value({Complex(0.0), Complex(0.0)}, 1.7) == Complex(0.0));

  const ScarfParams p{Complex(0.5), Complex(0.7)};
  const Complex v0 = scarf::potential_value(p, 0.0);
  CHECK(v0.real() == doctest::Approx(-1.24).epsilon(1e-14));
  CHECK(v0.imag() == 0.0);

  // Restated directly from the definition as an independent expression.
  const double x = 0.8;
  const double sech = 1.0 / std::cosh(x);
  const Complex expect = Complex(-(0.49 + 0.25 + 0.5) * sech * sech,
                                 0.7 * 2.0 * std::tanh(x) * sech);
  CHECK(std::abs(scarf::potential_value(p, x) - expect) < 1e-15);

  for (double xi = -3.0; xi <= 3.0; xi += 0.37) {
    // PT symmetry for real parameters.
    CHECK(std::abs(scarf::potential_value(p, xi) - std::conj(scarf::potential_value(p, -xi))) <
          1e-15);
    // Mirror maps B to -B.
    CHECK(std::abs(scarf::potential_value(p, xi) -
                   scarf::potential_value(p.mirrored(), -xi)) < 1e-15);
  }
}

TEST_CASE("free particle is exactly transparent") {
  const ScarfParams p{Complex(0.0), Complex(0.0)};
  for (double k : k_grid) {
    const scarf::ScatteringAmplitudes amps = scarf::amplitudes(p, WaveNumber(k));
    CHECK(std::abs(amps.t - Complex(1.0)) < 1e-13);
    CHECK(std::abs(amps.r_left) == 0.0);
    CHECK(std::abs(amps.r_right) == 0.0);
  }
}

TEST_CASE("amplitudes at a pinned point") {
  const ScarfParams p{Complex(0.5), Complex(0.7)};
  const scarf::ScatteringAmplitudes amps = scarf::amplitudes(p, WaveNumber(1.3));
  const Complex t_ref(0.61032552277407863, 0.79190330123875814);
  const Complex r_ref(0.015680313224075923, -0.012084929246759209);
  CHECK(std::abs(amps.t - t_ref) < 1e-13);
  CHECK(std::abs(amps.r_left - r_ref) < 1e-13);
  CHECK(std::abs(amps.r_right - r_ref) < 1e-13);
}

TEST_CASE("transmission is even in B") {
  for (double A : {-0.7, 0.3, 1.2}) {
    for (double B : {0.4, 1.1}) {
      for (double k : {0.3, 1.7}) {
        const Complex tp = scarf::transmission_amplitude({Complex(A), Complex(B)}, WaveNumber(k));
        const Complex tm = scarf::transmission_amplitude({Complex(A), Complex(-B)}, WaveNumber(k));
        CHECK(std::abs(tp - tm) <= 1e-14 * std::abs(tp));
      }
    }
  }
}

TEST_CASE("closed-form transmitivity matches |t|^2 on the grid") {
  for (double A : param_grid) {
    for (double B : param_grid) {
      for (double k : k_grid) {
        const ScarfParams p{Complex(A), Complex(B)};
        const double from_t = std::norm(scarf::transmission_amplitude(p, WaveNumber(k)));
        const double closed = scarf::transmitivity_closed_form(p, WaveNumber(k));
        CAPTURE(A);
        CAPTURE(B);
        CAPTURE(k);
        CHECK(std::abs(from_t - closed) <= 1e-10 * closed);
      }
    }
  }
  CHECK_THROWS_AS(
      scarf::transmitivity_closed_form({Complex(0.3, 0.1), Complex(0.2)}, WaveNumber(1.0)),
      scarf::DomainError);
}

TEST_CASE("unitarity case 1: half-integer A") {
  const double tanh_pi = std::tanh(3.14159265358979323846);
  const double T_ref = tanh_pi * tanh_pi;
  const scarf::Coefficients c0 = scarf::coefficients({Complex(0.5), Complex(0.0)}, WaveNumber(1.0));
  CHECK(c0.T == doctest::Approx(T_ref).epsilon(1e-12));

  for (double A : {-1.5, -0.5, 0.5, 1.5, 2.5}) {
    for (double B : {0.25, 0.7, 1.3}) {
      for (double k : k_grid) {
        const scarf::Coefficients c = scarf::coefficients({Complex(A), Complex(B)}, WaveNumber(k));
        CAPTURE(A);
        CAPTURE(B);
        CAPTURE(k);
        CHECK(std::fabs(c.R_left + c.T - 1.0) < 1e-10);
        CHECK(std::fabs(c.R_left - c.R_right) < 1e-10);
      }
    }
  }
}

TEST_CASE("unitarity case 2: integer B") {
  for (double B : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
    for (double A : {0.3, 0.8, 1.6}) {
      for (double k : k_grid) {
        const scarf::Coefficients c = scarf::coefficients({Complex(A), Complex(B)}, WaveNumber(k));
        CAPTURE(A);
        CAPTURE(B);
        CAPTURE(k);
        CHECK(std::fabs(c.R_left + c.T - 1.0) < 1e-10);
        CHECK(std::fabs(c.R_left - c.R_right) < 1e-10);
      }
    }
  }
}

TEST_CASE("bidirectional invisibility on both lattices") {
  const std::vector<std::pair<double, double>> points = {
      {0.5, 0.5}, {1.5, 0.5}, {1.0, 1.0}, {2.0, 1.0},
      {0.0, 0.0}, {-1.0, -2.0}, {-0.5, 1.5}};
  for (const auto& [A, B] : points) {
    for (double k : k_grid) {
      const scarf::ScatteringAmplitudes amps =
          scarf::amplitudes({Complex(A), Complex(B)}, WaveNumber(k));
      CAPTURE(A);
      CAPTURE(B);
      CHECK(amps.reflectivity_left() < 1e-12);
      CHECK(amps.reflectivity_right() < 1e-12);
      CHECK(std::fabs(amps.transmitivity() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("pseudo-unitarity holds in normal-transmission regimes") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  std::uniform_int_distribution<int> half(-2, 1);
  std::uniform_int_distribution<int> whole(-2, 2);
  for (int i = 0; i < 12; ++i) {
    double A, B;
    if (i % 3 == 0) {
      A = B = uni(rng);
    } else if (i % 3 == 1) {
      A = half(rng) + 0.5;
      B = uni(rng);
    } else {
      A = uni(rng);
      B = whole(rng);
    }
    for (double k : {0.1, 0.7, 1.9}) {
      const scarf::Coefficients c = scarf::coefficients({Complex(A), Complex(B)}, WaveNumber(k));
      CAPTURE(A);
      CAPTURE(B);
      CAPTURE(k);
      CHECK(std::fabs(c.T + std::sqrt(c.R_left * c.R_right) - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("generic parameters are handed") {
  const scarf::Coefficients c = scarf::coefficients({Complex(0.3), Complex(0.8)}, WaveNumber(0.5));
  CHECK(c.R_left == doctest::Approx(0.02027059746).epsilon(1e-9));
  CHECK(c.R_right == doctest::Approx(0.1677775484).epsilon(1e-9));
  CHECK(std::fabs(c.R_left - c.R_right) > 1e-4);
}

TEST_CASE("anomalous transmission exceeds unity at small k") {
  const scarf::Coefficients c = scarf::coefficients({Complex(1.0), Complex(0.25)}, WaveNumber(0.01));
  CHECK(c.T == doctest::Approx(1.99802932088).epsilon(1e-9));
  CHECK(c.T > 1.0);
  // k -> 0 limit of the closed form is 1/cos^2(pi B).
  const scarf::Coefficients c2 =
      scarf::coefficients({Complex(1.0), Complex(0.25)}, WaveNumber(0.001));
  CHECK(c2.T == doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("transmission pole raises SingularityError") {
  const ScarfParams p{Complex(-1.0, -1.0), Complex(-0.5, 1.0)};
  CHECK_THROWS_AS(scarf::transmission_amplitude(p, WaveNumber(1.0)), scarf::SingularityError);
  // Just off the pole the amplitude is finite and large.
  const Complex t = scarf::transmission_amplitude(p, WaveNumber(1.01));
  CHECK(std::isfinite(std::abs(t)));
  CHECK(std::abs(t) > 10.0);
}

TEST_CASE("published reflection rule differs from the hyperbolic variant") {
  const ScarfParams p{Complex(0.3), Complex(0.8)};
  const Complex published = scarf::reflection_amplitude(p, WaveNumber(0.5), scarf::Side::left,
                                                        scarf::ReflectionConvention::as_published);
  const Complex variant = scarf::reflection_amplitude(
      p, WaveNumber(0.5), scarf::Side::left, scarf::ReflectionConvention::hyperbolic_variant);
  CHECK(std::abs(published - variant) > 1e-3);

  // They coincide at B = 0 where sin/sinh and cos/cosh agree.
  const ScarfParams q{Complex(0.3), Complex(0.0)};
  const Complex a = scarf::reflection_amplitude(q, WaveNumber(0.5), scarf::Side::left,
                                                scarf::ReflectionConvention::as_published);
  const Complex b = scarf::reflection_amplitude(q, WaveNumber(0.5), scarf::Side::left,
                                                scarf::ReflectionConvention::hyperbolic_variant);
  CHECK(std::abs(a - b) < 1e-15);
}

TEST_CASE("coefficients agree with amplitudes") {
  const ScarfParams p{Complex(0.9), Complex(-1.2)};
  const WaveNumber k(0.8);
  const scarf::ScatteringAmplitudes amps = scarf::amplitudes(p, k);
  const scarf::Coefficients c = scarf::coefficients(p, k);
  CHECK(c.T == amps.transmitivity());
  CHECK(c.R_left == amps.reflectivity_left());
  CHECK(c.R_right == amps.reflectivity_right());
}
