#include <cmath>

#include "doctest.h"
#include "halfint/errors.hpp"
#include "halfint/quadrature.hpp"
#include "halfint/special_functions.hpp"

using namespace halfint;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_SUITE("special_functions") {
  TEST_CASE("gamma_real at half integers") {
    CHECK(gamma_real(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
    CHECK(gamma_real(6.5) == doctest::Approx(287.88527781504433).epsilon(1e-14));
    CHECK_THROWS_AS(gamma_real(0.0), DomainError);
    CHECK_THROWS_AS(gamma_real(-1.0), DomainError);
  }

  TEST_CASE("gamma_complex matches the real gamma and the reflection formula") {
    CHECK(rel(gamma_complex(Complex(4.5, 0.0)), Complex(gamma_real(4.5))) < 1e-13);
    const Complex z(0.3, 1.7);
    const Complex lhs = gamma_complex(z) * gamma_complex(1.0 - z);
    CHECK(rel(lhs, kPi / std::sin(kPi * z)) < 1e-12);
  }

  TEST_CASE("binom_general") {
    CHECK(binom_general(4.5, 2.0) == doctest::Approx(7.875).epsilon(1e-14));
    CHECK(binom_general(6.0, 3.0) == doctest::Approx(20.0).epsilon(1e-14));
    CHECK(binom_general(4.5, 2.5) == doctest::Approx(7.875).epsilon(1e-13));
    CHECK_THROWS_AS(binom_general(2.0, 3.0), DomainError);
  }

  TEST_CASE("incomplete gamma against frozen values") {
    CHECK(incomplete_gamma_upper(0.5, 0.1) == doctest::Approx(1.1604624847937442).epsilon(1e-12));
    CHECK(incomplete_gamma_upper(2.5, 1.0) == doctest::Approx(1.1288027918891023).epsilon(1e-12));
    CHECK(incomplete_gamma_upper(6.5, 10.0) == doctest::Approx(27.409631021882891).epsilon(1e-12));
    CHECK(incomplete_gamma_upper(4.5, 1.0) == doctest::Approx(11.532481914301135).epsilon(1e-12));
    CHECK(incomplete_gamma_upper(3.5, 0.0) == doctest::Approx(gamma_real(3.5)).epsilon(1e-14));
  }

  TEST_CASE("incomplete gamma recurrence") {
    for (int twice = 1; twice <= 13; twice += 2) {
      const double s = twice / 2.0;
      for (double x : {0.1, 1.0, 10.0}) {
        const double lhs = incomplete_gamma_upper(s + 1.0, x);
        const double rhs = s * incomplete_gamma_upper(s, x) + std::pow(x, s) * std::exp(-x);
        CHECK(std::abs(lhs - rhs) / std::abs(lhs) < 1e-10);
      }
    }
  }

  TEST_CASE("complex incomplete gamma of order one half") {
    CHECK(rel(incomplete_gamma_half_complex({0.5, 0.5}), {0.39118187945007233, -0.34908041232858858}) < 1e-12);
    CHECK(rel(incomplete_gamma_half_complex({3.0, -4.0}), {-0.0063920760517665408, -0.019956068593141613}) < 1e-12);
    CHECK(rel(incomplete_gamma_half_complex({10.0, -20.0}), {-1.0827547497161285e-6, 9.4375584027164004e-6}) < 1e-11);
    // real axis agrees with the real routine
    CHECK(rel(incomplete_gamma_half_complex({2.0, 0.0}), Complex(incomplete_gamma_upper(0.5, 2.0))) < 1e-12);
  }

  TEST_CASE("scaled remainder e^w Gamma(1/2, w) - w^{-1/2}") {
    CHECK(rel(scaled_gamma_half_remainder({0.5, 0.5}), {-0.25676053969226999, 0.25921468524000528}) < 1e-12);
    CHECK(rel(scaled_gamma_half_remainder({3.0, -4.0}), {-0.012731922661602611, -0.035165674616305654}) < 1e-12);
    CHECK(rel(scaled_gamma_half_remainder({10.0, -20.0}), {0.00015625991658589586, -0.0045750348985214024}) < 1e-12);
    CHECK(rel(scaled_gamma_half_remainder({40.0, -200.0}), {7.9468592513605188e-5, -0.00015185864084973341}) < 1e-12);
    CHECK_THROWS_AS(scaled_gamma_half_remainder({-1.0, 1.0}), DomainError);
  }

  TEST_CASE("principal powers") {
    CHECK(rel(cpow(Complex(0.0, 1.0), 0.5), std::polar(1.0, kPi / 4)) < 1e-15);
    CHECK(rel(cpow(Complex(-1.0, 0.0), 0.5), Complex(0.0, 1.0)) < 1e-15);
    CHECK(rel(i_pow(6.5), std::polar(1.0, 6.5 * kPi / 2)) < 1e-14);
    CHECK_THROWS_AS(cpow(Complex(0.0), -1.0), DomainError);
  }
}

TEST_SUITE("quadrature") {
  TEST_CASE("finite interval") {
    QuadResult r = integrate_interval([](double x) { return Complex(std::exp(-x) * std::cos(x), x * x); }, 0.0, 2.0);
    const double re = 0.5 * (1.0 + std::exp(-2.0) * (std::sin(2.0) - std::cos(2.0)));
    CHECK(std::abs(r.value - Complex(re, 8.0 / 3.0)) < 1e-13);
  }

  TEST_CASE("vertical integral of an exponentially decaying function") {
    QuadResult r = integrate_vertical([](double t) { return Complex(std::exp(-2.0 * kPi * t)); }, 0.3);
    CHECK(std::abs(r.value - std::exp(-0.6 * kPi) / (2.0 * kPi)) < 1e-14);
  }

  TEST_CASE("algebraic half line") {
    QuadResult r = integrate_half_line_algebraic([](double t) { return Complex(1.0 / (1.0 + t * t)); });
    CHECK(std::abs(r.value - kPi / 2.0) < 1e-11);
  }
}
