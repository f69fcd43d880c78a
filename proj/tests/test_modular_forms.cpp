#include "doctest.h"
#include "halfint/bundled_forms.hpp"
#include "halfint/errors.hpp"
#include "halfint/modular_forms.hpp"

using namespace halfint;

TEST_SUITE("modular_forms") {
  TEST_CASE("bundled forms validate") {
    for (const auto& name : bundled_names()) {
      FormValidation v;
      FourierExpansion f = with_validation(bundled_form(name), &v);
      CHECK(v.pass);
      CHECK(f.status == FormStatus::Validated);
      for (const auto& d : v.modularity.deviations) CHECK(d.max_relative_deviation < 1e-9);
      REQUIRE(v.fricke);
      CHECK(v.fricke->max_relative_deviation < 1e-9);
    }
  }

  TEST_CASE("a corrupted coefficient is rejected") {
    FourierExpansion f = bundled_form("f13");
    f.coefficients[2] += 1.0;
    CHECK_FALSE(validate_form(f).pass);
    CHECK(with_validation(f).status == FormStatus::Rejected);
  }

  TEST_CASE("extended evaluation agrees with direct summation") {
    FourierExpansion f = bundled_form("f13");
    for (Complex z : {Complex(0.1, 0.9), Complex(-0.4, 0.6), Complex(0.0, 1.5)}) {
      Evaluation a = evaluate(f, z);
      Evaluation b = evaluate_extended(f, z);
      CHECK(std::abs(a.value - b.value) < 1e-12 * std::max(1.0, std::abs(a.value)));
    }
  }

  TEST_CASE("slash by W_4 and by the integral-weight form") {
    FourierExpansion g = bundled_form("g6");
    const GroupElement W = GroupElement::fricke_involution(4);
    FormFunction slashed = slash_function(as_function(g), W, 12, 4);
    FormFunction direct = as_function(g);
    for (Complex z : {Complex(0.1, 0.7), Complex(0.3, 0.4)}) {
      CHECK(std::abs(slashed(z) + direct(z)) < 1e-10 * std::abs(direct(z)));
    }
  }

  TEST_CASE("rescaled argument") {
    FourierExpansion g1 = rescale_argument(bundled_form("g6"), 2);
    CHECK(g1.width() == 2.0);
    CHECK(g1.reflection_level() == 1);
    // eta(z)^12 is odd under S in weight 6
    for (Complex z : {Complex(0.1, 1.1), Complex(-0.2, 0.8)}) {
      Complex lhs = evaluate_extended(g1, -1.0 / z).value;
      Complex rhs = -std::pow(z, 6) * evaluate_extended(g1, z).value;
      CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(rhs));
    }
  }

  TEST_CASE("Kronecker symbol and epsilon_d") {
    CHECK(kronecker_symbol(4, 7) == 1);
    CHECK(kronecker_symbol(3, 7) == -1);
    CHECK(kronecker_symbol(0, 1) == 1);
    CHECK(std::abs(epsilon_d(1) - 1.0) < 1e-15);
    CHECK(std::abs(epsilon_d(3) - Complex(0.0, 1.0)) < 1e-15);
    CHECK(std::abs(epsilon_d(-1) - Complex(0.0, 1.0)) < 1e-15);
  }

  TEST_CASE("linear combinations") {
    FourierExpansion g = bundled_form("g6");
    FourierExpansion h = linear_combination(g, 2.0, g, -1.0);
    CHECK(h.a(3) == g.a(3));
    CHECK(scaled(g, 3.0).a(5) == 3.0 * g.a(5));
  }
}
