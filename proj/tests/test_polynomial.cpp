#include "doctest.h"
#include "halfint/polynomial.hpp"

using namespace halfint;

TEST_SUITE("polynomial") {
  TEST_CASE("evaluation and arithmetic") {
    Polynomial p({1.0, 2.0, 3.0});
    CHECK(std::abs(p(Complex(2.0, 0.0)) - 17.0) < 1e-15);
    Polynomial q({0.0, 1.0});
    Polynomial r = p.times(q);
    CHECK(r.degree_bound() == 3);
    CHECK(std::abs(r[3] - 3.0) < 1e-15);
    CHECK(((p - p).norm()) == 0.0);
    CHECK(std::abs((Complex(2.0) * p)[1] - 4.0) < 1e-15);
  }

  TEST_CASE("affine substitution") {
    Polynomial p({1.0, 0.0, 1.0});  // 1 + z^2
    Polynomial s = p.substitute_affine(2.0, 1.0);  // 1 + (2z + 1)^2
    for (Complex z : {Complex(0.3, 0.1), Complex(-2.0, 1.0)}) {
      CHECK(std::abs(s(z) - p(2.0 * z + 1.0)) < 1e-13);
    }
  }

  TEST_CASE("parity split") {
    Polynomial p({1.0, 2.0, 3.0, 4.0});
    CHECK((p.even_part() + p.odd_part() - p).norm() == 0.0);
    CHECK(std::abs(p.odd_part()[2]) == 0.0);
  }

  TEST_CASE("interpolation recovers coefficients") {
    Polynomial p({Complex(1.0, 1.0), 2.0, Complex(0.0, -3.0), 0.5});
    std::vector<Complex> nodes = {0.0, 1.0, Complex(0.0, 1.0), -2.0};
    std::vector<Complex> values;
    for (Complex z : nodes) values.push_back(p(z));
    CHECK((interpolate(nodes, values) - p).norm() < 1e-12);
  }
}
