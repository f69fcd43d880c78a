// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "halfint/bundled_forms.hpp"
#include "halfint/cocycles.hpp"
#include "halfint/errors.hpp"
#include "halfint/kr_comparison.hpp"
#include "halfint/lift_solver.hpp"
#include "halfint/period_polynomials.hpp"

using namespace halfint;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

const FourierExpansion& form_f() {
  static const FourierExpansion f = bundled_form("f13");
  return f;
}

const FourierExpansion& form_g() {
  static const FourierExpansion g = bundled_form("g6");
  return g;
}

const LSeriesEvaluator& ev_f() {
  static const LSeriesEvaluator ev(form_f());
  return ev;
}

const LSeriesEvaluator& ev_g() {
  static const LSeriesEvaluator ev(form_g());
  return ev;
}

KernelParams kernel(Rational a) {
  KernelParams p;
  p.a = a;
  return p;
}

Outcome special_functions() {
  double worst = 0.0;
  for (int twice = 1; twice <= 13; twice += 2) {
    const double s = twice / 2.0;
    for (double x : {0.1, 1.0, 10.0}) {
      const double lhs = incomplete_gamma_upper(s + 1.0, x);
      const double rhs = s * incomplete_gamma_upper(s, x) + std::pow(x, s) * std::exp(-x);
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
    }
  }
  return {worst < 1e-10, fmt("max rel %.2e", worst)};
}

Outcome form_validation() {
  double worst = 0.0;
  bool pass = true;
  for (const FourierExpansion* f : {&form_f(), &form_g()}) {
    FormValidation v = validate_form(*f, 1e-9);
    for (const auto& d : v.modularity.deviations) worst = std::max(worst, d.max_relative_deviation);
    if (!v.fricke || v.fricke->samples != 10) pass = false;
    if (v.fricke) worst = std::max(worst, v.fricke->max_relative_deviation);
    pass = pass && v.pass;
  }
  return {pass, fmt("max deviation %.2e", worst)};
}

Outcome functional_equation() {
  FunctionalEquationReport a = verify_functional_equation(ev_f(), {1.0, 2.0, 3.25, 4.5, Complex(1.0, 2.0)}, 1e-8);
  FunctionalEquationReport b = verify_functional_equation(ev_g(), {1.0, 2.0, 3.0, 4.0, Complex(2.0, 1.5)}, 1e-8);
  const double worst = std::max(a.max_abs_residual, b.max_abs_residual);
  return {a.pass && b.pass && worst < 1e-8, fmt("max residual %.2e", worst)};
}

Outcome kernel_symmetry() {
  TransfReport r = verify_kernel_symmetry(kernel({9, 2}), 100, 1e-10, 0);
  return {r.pass, fmt("max rel %.2e over %g pairs", r.max_rel_error, r.samples)};
}

Outcome lval_vs_quadrature() {
  double worst = 0.0;
  for (Rational a : {Rational(9, 2), Rational(17, 4)}) {
    const PeriodPolynomial P = period_polynomial_from_lvalues(ev_f(), kernel(a));
    const QuadraturePeriod Q = period_polynomial_by_quadrature(form_f(), kernel(a));
    const double scale = P.coefficients.max_abs();
    for (int n = 0; n <= 4; ++n) {
      worst = std::max(worst, std::abs(Q.polynomial.coefficients[n] - P.coefficients[n]) / scale);
    }
  }
  return {worst < 1e-6, fmt("max rel %.2e", worst)};
}

Outcome eichler() {
  const PeriodPolynomial P = period_polynomial_from_lvalues(ev_f(), kernel({9, 2}));
  EichReport r = verify_theorem_eich_i(form_f(), P, sample_points(10, 0.6, 1.6), Character::for_weight(13), 1e-6, 1e-8);
  return {r.pass && r.rows.size() == 10 && r.peri_norm < 1e-8,
          fmt("max residual %.2e, peri norm %.2e", r.max_residual, r.peri_norm)};
}

Outcome group_exactness() {
  std::mt19937_64 rng(0);
  int bad = 0;
  const GroupTag tags[] = {GroupTag::PSL2Z, GroupTag::H2, GroupTag::Gamma04Star};
  for (int j = 0; j < 1000; ++j) {
    const GroupTag tag = tags[j % 3];
    const GroupElement g = random_element(tag, 12, rng);
    Word w = tag == GroupTag::PSL2Z ? decompose_psl2z(g) : tag == GroupTag::H2 ? decompose_theta(g) : decompose_gamma04star(g);
    if (!(recompose(w) == g)) ++bad;
  }
  int bad_kappa = 0;
  for (int j = 0; j < 300; ++j) {
    const GroupElement g = random_element(GroupTag::PSL2Z, 8, rng), h = random_element(GroupTag::PSL2Z, 8, rng);
    for (CosetRep x : kCosets) {
      if (!(kappa(x, g * h) == kappa(x, g) * kappa(coset_u(coset_element(x) * g), h))) ++bad_kappa;
    }
  }
  return {bad == 0 && bad_kappa == 0, fmt("%g round-trip mismatches, %g kappa mismatches", bad, bad_kappa)};
}

Outcome cocycle_pipeline() {
  const PeriodPolynomial P = period_polynomial_from_lvalues(ev_f(), kernel({9, 2}));
  const double w2 = relation_defect(gamma04_cocycle(P, Character::for_weight(13)));
  const CocycleOnGenerators th = theta_cocycle(P);
  const InducedVector v = induced_pi(th, coset_element(CosetRep::U));
  const double indep = std::max({(v[CosetRep::One] - P.coefficients.substitute_affine(0.5, 0.0)).max_abs(),
                                 (v[CosetRep::T] - P.coefficients.substitute_affine(0.5, -0.5)).max_abs(),
                                 v[CosetRep::U].max_abs()});
  const WMembershipReport w = check_w_membership(v, 1e-8);
  return {w2 < 1e-8 && indep < 1e-10 && w.pass,
          fmt("W4^2 %.2e, indep %.2e, W-membership S %.2e U %.2e", w2, indep, w.s_residual, w.u_residual)};
}

Outcome pair_lift() {
  const LiftSolution s = solve_lift_pair(ev_f(), kernel({17, 4}), {ev_g()}, {ev_g()}, 1e-6, false);
  double worst = 0.0;
  for (const auto& e : s.equations) worst = std::max(worst, e.residual);
  const Complex c(0.3, -0.2), d(-1.1, 0.4);
  const LiftSolution back = solve_lift_pair(rhs_vector_theorem_coh(13, {ev_g()}, {c}, {ev_g()}, {d}), 13, {ev_g()}, {ev_g()});
  const double recovery = std::max(std::abs(back.g_coords[0] - c), std::abs(back.h_coords[0] - d));
  return {s.equations.size() == 5 && worst < 1e-6 && recovery < 1e-8,
          fmt("max equation residual %.2e, residual norm %.2e, synthesis recovery %.2e", worst, s.residual_norm, recovery)};
}

Outcome odd_lift() {
  const KernelParams p = kernel({9, 2});
  const OddLiftResult o = solve_lift_odd(ev_f(), p, {ev_g()}, 1e-6, 1e-6, false);
  const SCoefficients sc = s_coefficients(lambda_provider(ev_f()), p);
  const auto t1 = binomial_transform(restrict_parity(period_vector(o.g1, CosetRep::One, 4), Parity::Minus));
  const auto tT = binomial_transform(restrict_parity(period_vector(o.g1, CosetRep::T, 4), Parity::Minus));
  double consistency = 0.0;
  for (int n = 0; n <= 4; ++n) consistency = std::max({consistency, std::abs(sc.s_one[n] - t1[n]), std::abs(sc.s_T[n] - tT[n])});
  double worst = 0.0;
  for (const auto& e : o.solution.equations) worst = std::max(worst, e.residual);
  const double basic = std::max(o.basic.deviation_one, o.basic.deviation_T);
  return {worst < 1e-6 && basic < 1e-6 && consistency < 1e-6,
          fmt("residual %.2e, basic %.2e, s-consistency %.2e", worst, basic, consistency)};
}

Outcome specialization() {
  const LambdaProvider lf = lambda_provider(ev_f());
  const std::vector<Complex> lhs = lhs_vector_theorem_coh(lf, kernel({17, 4}));
  double worst = 0.0;
  for (int n = 0; n <= 4; ++n) {
    const Complex alt = specialization_constant(13) * specialized_lhs(lf, 13, n);
    const double scale = std::max(std::abs(lhs[n]), std::abs(alt));
    if (scale > 0.0) worst = std::max(worst, std::abs(lhs[n] - alt) / scale);
  }
  return {worst < 1e-12, fmt("max rel %.2e", worst)};
}

Outcome kr_identity() {
  const KREvaluator kr(ev_f(), 300);
  const KReichReport r = verify_kreich(kr, {{0.0, 0.5}, {1.0 / 3.0, 1.0}, {0.0, 2.0}}, 1e-5);
  const KRIntegralReport ir = kr_integral_representation(kr, {0.0, 1.0}, 1e-4);
  return {r.pass && ir.pass, fmt("identity rel %.2e, integral representation rel %.2e", r.max_rel_residual, ir.rel_deviation)};
}

Outcome psi_comparison() {
  const BrugReport r = verify_prop_brug(ev_f(), {2.0, 4.0, 8.0, 16.0}, 10.0);
  std::string ratios;
  for (const auto& row : r.rows) ratios += (ratios.empty() ? "" : " ") + fmt("%.3g", row.ratio);
  return {r.pass, "R(x)/x^5 = " + ratios + fmt(", max over first %.3g", r.max_ratio_over_first)};
}

Outcome cli_suite(const std::string& cli, Clock::time_point start) {
  if (cli.empty()) return {false, "no CLI path given (--cli)"};
  const auto dir = std::filesystem::temp_directory_path() / "halfint_acceptance_cli";
  std::filesystem::remove_all(dir);
  const std::string cmd = "\"" + cli + "\" verify all --out \"" + dir.string() + "\" > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  int artifacts = 0, bad = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    ++artifacts;
    try {
      const Json j = read_json_file(entry.path());
      if (!(Json::parse(j.dump()) == j)) ++bad;
    } catch (const std::exception&) {
      ++bad;
    }
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return {code == 0 && artifacts > 0 && bad == 0 && seconds < 600.0,
          fmt("verify all exit %g, %g artifacts, %g round-trip failures, suite %.1f s", code, artifacts, bad, seconds)};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int j = 1; j + 1 < argc; ++j) {
    if (std::string(argv[j]) == "--cli") cli = argv[j + 1];
  }
  const auto start = Clock::now();
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "incomplete gamma recurrence", 1.0, special_functions},
      {2, "form validation", 10.0, form_validation},
      {3, "functional equation", 10.0, functional_equation},
      {4, "kernel symmetry", 1.0, kernel_symmetry},
      {5, "L-value formula vs quadrature", 60.0, lval_vs_quadrature},
      {6, "Eichler integral and period relation", 120.0, eichler},
      {7, "group exactness", 5.0, group_exactness},
      {8, "cocycle pipeline", 0.0, cocycle_pipeline},
      {9, "pair lift", 0.0, pair_lift},
      {10, "odd lift", 0.0, odd_lift},
      {11, "specialization algebra", 0.0, specialization},
      {12, "KR identity", 0.0, kr_identity},
      {13, "psi comparison remainder", 0.0, psi_comparison},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool in_time = c.budget_seconds <= 0.0 || dt < c.budget_seconds;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("criterion %2d  %-38s %s  (%s; %.2f s%s)\n", c.id, c.name, pass ? "PASS" : "FAIL", o.detail.c_str(), dt,
                in_time ? "" : ", over budget");
    std::fflush(stdout);
  }
  const auto t0 = Clock::now();
  Outcome o = cli_suite(cli, start);
  failures += !o.pass;
  std::printf("criterion 14  %-38s %s  (%s; %.2f s)\n", "CLI verify all and artifacts", o.pass ? "PASS" : "FAIL",
              o.detail.c_str(), std::chrono::duration<double>(Clock::now() - t0).count());
  return failures ? 1 : 0;
}
