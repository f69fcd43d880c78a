#include <map>

#include "doctest.h"
#include "halfint/bundled_forms.hpp"
#include "halfint/errors.hpp"
#include "halfint/lift_solver.hpp"

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

const FourierExpansion& g1() {
  static const FourierExpansion g = rescale_argument(bundled_form("g6"), 2);
  return g;
}

KernelParams params(Rational a) {
  KernelParams p;
  p.a = a;
  return p;
}

}  // namespace

TEST_SUITE("lift_solver") {
  TEST_CASE("period vector at the identity coset equals scaled L-values") {
    LSeriesEvaluator ev(g1());
    PeriodVector v = period_vector(g1(), CosetRep::One, 4);
    REQUIRE(v.r.size() == 5);
    for (int n = 0; n <= 4; ++n) {
      Complex ref = i_pow(n + 1.0) * ev.lambda(n + 1.0).value;
      CHECK(std::abs(v.r[n] - ref) < 1e-12 * std::abs(ref));
    }
    CHECK(std::abs(v.r[1] - Complex(-0.0557933, 0.0)) < 1e-7);
  }

  TEST_CASE("period vectors of eta(z)^12 at the other cosets") {
    PeriodVector one = period_vector(g1(), CosetRep::One, 4);
    PeriodVector t = period_vector(g1(), CosetRep::T, 4);
    PeriodVector u = period_vector(g1(), CosetRep::U, 4);
    for (int n = 0; n <= 4; ++n) {
      CHECK(std::abs(t.r[n] + one.r[n]) < 1e-10);
      CHECK(std::abs(u.r[n] - one.r[n]) < 1e-10);
    }
  }

  TEST_CASE("parity restriction and rho polynomial") {
    PeriodVector v{CosetRep::One, {1.0, 2.0, 3.0, 4.0, 5.0}, Parity::Full};
    PeriodVector m = restrict_parity(v, Parity::Minus);
    CHECK(m.r[0] == Complex(0.0));
    CHECK(m.r[1] == Complex(2.0));
    Polynomial rho = rho_polynomial(v);
    // coefficient of z^{D-n} is (-1)^n binom(4, n) r_n
    CHECK(rho[4] == Complex(1.0));
    CHECK(rho[3] == Complex(-8.0));
    CHECK(rho[0] == Complex(5.0));
  }

  TEST_CASE("binomial transform") {
    PeriodVector v{CosetRep::One, {1.0, 2.0, 4.0, 8.0, 16.0}, Parity::Full};
    std::vector<Complex> t = binomial_transform(v);
    // sum_j binom(n, j)(-1)^{n-j} 2^j = 1
    for (Complex c : t) CHECK(std::abs(c - 1.0) < 1e-14);
  }

  TEST_CASE("specialized left-hand side") {
    const LambdaProvider lf = lambda_provider(f_eval());
    const std::vector<Complex> lhs = lhs_vector_theorem_coh(lf, params({17, 4}));
    for (int n = 0; n <= 4; ++n) {
      const Complex alt = specialization_constant(13) * specialized_lhs(lf, 13, n);
      CHECK(std::abs(lhs[n] - alt) <= 1e-12 * std::max(std::abs(lhs[n]), 1e-300));
    }
  }

  TEST_CASE("forward synthesis recovers known coordinates") {
    const std::vector<Complex> c = {Complex(0.3, -0.2)}, d = {Complex(-1.1, 0.4)};
    const std::vector<Complex> rhs = rhs_vector_theorem_coh(13, {g_eval()}, c, {g_eval()}, d);
    LiftSolution s = solve_lift_pair(rhs, 13, {g_eval()}, {g_eval()});
    CHECK(std::abs(s.g_coords[0] - c[0]) < 1e-8);
    CHECK(std::abs(s.h_coords[0] - d[0]) < 1e-8);
    CHECK(s.residual_norm < 1e-12);
    CHECK(s.system_rank == 2);
  }

  TEST_CASE("solutions scale linearly with the form") {
    const LSeriesEvaluator f2(scaled(f_eval().form(), 2.0));
    const LiftSolution a = solve_lift_pair(f_eval(), params({17, 4}), {g_eval()}, {g_eval()}, 1e-6, false);
    const LiftSolution b = solve_lift_pair(f2, params({17, 4}), {g_eval()}, {g_eval()}, 1e-6, false);
    CHECK(std::abs(b.g_coords[0] - 2.0 * a.g_coords[0]) < 1e-10 * std::abs(a.g_coords[0]));
    CHECK(std::abs(b.h_coords[0] - 2.0 * a.h_coords[0]) < 1e-10 * std::abs(a.h_coords[0]));
    CHECK(b.residual_norm == doctest::Approx(2.0 * a.residual_norm).epsilon(1e-10));
    const OddLiftResult oa = solve_lift_odd(f_eval(), params({9, 2}), {g_eval()}, 1e-6, 1e-6, false);
    const OddLiftResult ob = solve_lift_odd(f2, params({9, 2}), {g_eval()}, 1e-6, 1e-6, false);
    CHECK(ob.solution.residual_norm == doctest::Approx(2.0 * oa.solution.residual_norm).epsilon(1e-10));
  }

  TEST_CASE("odd lift output re-expands with the width-two scaling") {
    const OddLiftResult o = solve_lift_odd(f_eval(), params({9, 2}), {g_eval()}, 1e-6, 1e-6, false);
    const LSeriesEvaluator lifted(o.g1);
    const LSeriesEvaluator level4(scaled(g_eval().form(), o.solution.g_coords[0]));
    for (double s : {2.0, 3.0, 4.0}) {
      const Complex expected = std::pow(2.0, s) * level4.lambda(s).value;
      CHECK(std::abs(lifted.lambda(s).value - expected) < 1e-8 * std::max(1.0, std::abs(expected)));
    }
  }

  TEST_CASE("zero left-hand side gives zero coordinates") {
    LiftSolution s = solve_lift_pair(std::vector<Complex>(5, 0.0), 13, {g_eval()}, {g_eval()});
    CHECK(std::abs(s.g_coords[0]) == 0.0);
    CHECK(std::abs(s.h_coords[0]) == 0.0);
  }

  TEST_CASE("inconsistent systems raise with the least-squares solution attached") {
    std::vector<Complex> lhs = {1.0, 0.0, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(solve_lift_pair(lhs, 13, {g_eval()}, {g_eval()}), InconsistentSystemError);
    try {
      solve_lift_pair(lhs, 13, {g_eval()}, {g_eval()});
    } catch (const InconsistentSystemError& e) {
      CHECK(e.solution().residual_norm > 1e-6);
      CHECK(e.solution().equations.size() == 5);
    }
    LiftSolution s = solve_lift_pair(lhs, 13, {g_eval()}, {g_eval()}, 1e-6, false);
    CHECK(s.residual_norm > 1e-6);
  }

  TEST_CASE("basis checks") {
    FourierExpansion g = bundled_form("g6");
    g.status = FormStatus::Unvalidated;
    LSeriesEvaluator unvalidated(g);
    CHECK_THROWS_AS(solve_lift_pair(std::vector<Complex>(5, 0.0), 13, {unvalidated}, {}), DomainError);
    CHECK_THROWS_AS(solve_lift_pair(std::vector<Complex>(5, 0.0), 13, {f_eval()}, {}), DomainError);
  }

  TEST_CASE("LiftSolution JSON round trip") {
    const std::vector<Complex> rhs = rhs_vector_theorem_coh(13, {g_eval()}, {0.5}, {g_eval()}, {Complex(0.0, 1.0)});
    LiftSolution s = solve_lift_pair(rhs, 13, {g_eval()}, {g_eval()});
    Json j = lift_solution_to_json(s);
    LiftSolution back = lift_solution_from_json(j);
    CHECK(lift_solution_to_json(back) == j);
    CHECK(back.basis_labels == s.basis_labels);
  }

  TEST_CASE("odd rows of the basis are proportional") {
    // Lambda_g(2) = 4 Lambda_g(4) for a form with g|W_4 = -g in weight 6
    CHECK(std::abs(g_eval().lambda(2.0).value - 4.0 * g_eval().lambda(4.0).value) < 1e-14);
  }

  TEST_CASE("Eichler-Shimura pairing") {
    CHECK(es_pairing_w4(nullptr, nullptr, 13).norm() == 0.0);
    const LambdaProvider lg = lambda_provider(g_eval());
    Polynomial p = es_pairing_w4(&lg, nullptr, 13);
    CHECK(p.degree_bound() == 4);
    CHECK(p.norm() > 0.0);
  }

  TEST_CASE("corollary ratio recovers a synthetic constant") {
    // lambda = 1 makes the n = 2 bracket consistent with B_2 = 0
    const Complex lambda = 1.0;
    std::map<double, Complex> f_values;
    const LambdaProvider lg = [](double s) { return Complex(1.0 / s, 0.25 * s); };
    for (int n = 0; n <= 4; ++n) {
      const Complex c = corollary_constant(13, 4, n, lambda);
      f_values[6.5 - 1.25 - n] = std::isfinite(std::abs(c)) ? c * lg(5.0 - n) : Complex(0.0);
    }
    const LambdaProvider lf = [&](double s) { return f_values.at(s); };
    CorollaryReport r = corollary_ratio(lf, lg, 13, 4);
    CHECK(std::abs(r.lambda_f - lambda) < 1e-12);
    CHECK(r.pass);
    const LambdaProvider zero = [](double) { return Complex(0.0); };
    CHECK_THROWS_AS(corollary_ratio(lf, zero, 13, 4), DomainError);
  }

  TEST_CASE("s-coefficients of the zero form vanish") {
    const LambdaProvider zero = [](double) { return Complex(0.0); };
    SCoefficients s = s_coefficients(zero, params({9, 2}));
    for (Complex c : s.s_one) CHECK(c == Complex(0.0));
    for (Complex c : s.s_T) CHECK(c == Complex(0.0));
  }

  TEST_CASE("assembly without R-data is unsupported") {
    SCoefficients s = s_coefficients(lambda_provider(f_eval()), params({9, 2}));
    CHECK_THROWS_AS(assemble_theorem_expl(s, {}, 13), DomainError);
  }
}
