#include <algorithm>

#include "doctest.h"
#include "halfint/bundled_forms.hpp"
#include "halfint/errors.hpp"
#include "halfint/eta_quotient.hpp"

using namespace halfint;

TEST_SUITE("eta_quotient") {
  TEST_CASE("bundled quotients") {
    const EtaQuotient f = half_integral_quotient();
    CHECK(f.weight_times_two() == 13);
    CHECK(f.infinity_sum() == 24);
    CHECK(cusp_orders(f).cuspidal());
    const EtaQuotient g = basis_quotient();
    CHECK(g.weight_times_two() == 12);
    CHECK(cusp_orders(g).cuspidal());
  }

  TEST_CASE("pentagonal series") {
    EtaQuotient q{4, {{1, 1}}};
    std::vector<BigInt> c = eta_product_series(q, 16);
    std::vector<int> expected = {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1};
    for (int n = 0; n < 16; ++n) CHECK(c[n] == expected[n]);
  }

  TEST_CASE("coefficients computed by independent q-series multiplication") {
    FourierExpansion f = eta_expansion(half_integral_quotient(), 12);
    std::vector<int> fa = {1, 2, -12, -24, 56, 108, -112, -176, 9, -196, 364, 1056};
    for (int n = 1; n <= 12; ++n) CHECK(f.a(n) == Complex(fa[n - 1]));
    FourierExpansion g = eta_expansion(basis_quotient(), 12);
    std::vector<int> ga = {1, 0, -12, 0, 54, 0, -88, 0, -99, 0, 540, 0};
    for (int n = 1; n <= 12; ++n) CHECK(g.a(n) == Complex(ga[n - 1]));
  }

  TEST_CASE("Fricke images") {
    FrickeImage fi = eta_fricke(half_integral_quotient());
    CHECK(fi.image == half_integral_quotient());
    CHECK(std::abs(fi.scalar - 1.0) < 1e-12);
    FrickeImage gi = eta_fricke(basis_quotient());
    CHECK(gi.image == basis_quotient());
  }

  TEST_CASE("search finds the bundled quotients") {
    auto has = [](const std::vector<EtaQuotient>& v, const EtaQuotient& q) {
      return std::find(v.begin(), v.end(), q) != v.end();
    };
    CHECK(has(eta_search(12, 4, 12), basis_quotient()));
    CHECK(has(eta_search(13, 4, 17), half_integral_quotient()));
    CHECK_THROWS_AS(eta_search(13, 6, 5), DomainError);
  }

  TEST_CASE("non-cuspidal quotient is rejected") {
    EtaQuotient q{2, {{1, -24}, {2, 24}}};
    CHECK_FALSE(cusp_orders(q).cuspidal());
    CHECK_THROWS(eta_expansion(q, 10));
  }
}
