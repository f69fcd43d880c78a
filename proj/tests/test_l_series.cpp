#include "doctest.h"
#include "halfint/bundled_forms.hpp"
#include "halfint/errors.hpp"
#include "halfint/l_series.hpp"
#include "halfint/quadrature.hpp"

using namespace halfint;

namespace {

const LSeriesEvaluator& f_eval() {
  static const LSeriesEvaluator ev(bundled_form("f13"));
  return ev;
}

const LSeriesEvaluator& g_eval() {
  static const LSeriesEvaluator ev(bundled_form("g6"));
  return ev;
}

double rel(Complex a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_SUITE("l_series") {
  TEST_CASE("completed values against high-precision references") {
    CHECK(rel(f_eval().lambda(1.0).value, 0.04891320902933013) < 1e-12);
    CHECK(rel(f_eval().lambda(2.0).value, 0.01688795972236538) < 1e-12);
    CHECK(rel(f_eval().lambda(3.25).value, 0.005991645149267198) < 1e-12);
    CHECK(rel(f_eval().lambda(4.5).value, 0.002985397710022461) < 1e-12);
    CHECK(rel(f_eval().lambda(5.25).value, 0.002300521995612622) < 1e-12);
    CHECK(rel(g_eval().lambda(4.0).value, 0.003487078827405435) < 1e-12);
  }

  TEST_CASE("Dirichlet series values") {
    CHECK(rel(f_eval().dirichlet(3.0).value, 0.88979105127775688) < 1e-12);
    CHECK(rel(f_eval().dirichlet(6.0).value, 1.0133558085924085) < 1e-12);
    CHECK_THROWS_AS(f_eval().dirichlet(0.0), DomainError);
  }

  TEST_CASE("Mellin transform by quadrature") {
    const FourierExpansion& f = f_eval().form();
    const double s = 2.75;
    auto integrand = [&](double t) { return evaluate_extended(f, Complex(0.0, t)).value * std::pow(t, s - 1.0); };
    Complex q = integrate_interval(integrand, 0.0, 0.5).value + integrate_vertical(integrand, 0.5).value;
    CHECK(std::abs(q - f_eval().lambda(s).value) < 1e-12);
  }

  TEST_CASE("split height does not matter") {
    for (double t1 : {0.3, 0.8, 1.3}) {
      for (Complex s : {Complex(1.5), Complex(2.0, 1.0), Complex(5.0)}) {
        Complex a = f_eval().lambda_split(s, t1).value;
        Complex b = f_eval().lambda(s).value;
        CHECK(std::abs(a - b) < 1e-12 * std::abs(b));
      }
    }
  }

  TEST_CASE("functional equation") {
    auto r = verify_functional_equation(f_eval(), {1.0, 2.0, 3.25, 4.5, Complex(1.0, 2.0)}, 1e-8);
    CHECK(r.pass);
    CHECK(r.rows.size() == 5);
    auto rg = verify_functional_equation(g_eval(), {1.0, 2.0, 3.0, 4.0, 5.0}, 1e-8);
    CHECK(rg.pass);
  }

  TEST_CASE("Fricke eigenvalues") {
    CHECK(std::abs(f_eval().fricke_eigenvalue() - 1.0) < 1e-15);
    CHECK(std::abs(g_eval().fricke_eigenvalue() - 1.0) < 1e-15);
  }

  TEST_CASE("rescaled form scales the completed values") {
    LSeriesEvaluator g1(rescale_argument(g_eval().form(), 2));
    for (double s : {1.0, 2.5, 4.0}) {
      CHECK(std::abs(g1.lambda(s).value - std::pow(2.0, s) * g_eval().lambda(s).value) < 1e-13);
    }
  }
}
