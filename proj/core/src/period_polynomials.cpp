#include "halfint/period_polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "halfint/errors.hpp"

namespace halfint {

void KernelParams::validate() const {
  if (k_times_two % 2 == 0) throw DomainError("kernel weight must be half-integral");
  if (k_times_two <= 5) throw DomainError("kernel weight must exceed 5/2");
  if (level <= 0 || level % 4 != 0) throw DomainError("kernel level must be a positive multiple of 4");
  Rational upper = Rational(2 * k_times_two - 9, 2);
  if (a < 0 || a > upper) {
    throw DomainError("a = " + rational_to_string(a) + " lies outside [0, " + rational_to_string(upper) + "]");
  }
}

Json period_polynomial_to_json(const PeriodPolynomial& p) {
  Json j;
  j["degree_bound"] = p.params.degree();
  j["coefficients"] = complex_vector_to_json(p.coefficients.coefficients());
  j["k_times_two"] = p.params.k_times_two;
  j["level"] = p.params.level;
  j["a"] = rational_to_string(p.params.a);
  return j;
}

PeriodPolynomial period_polynomial_from_json(const Json& j) {
  PeriodPolynomial p;
  try {
    p.params.k_times_two = j.at("k_times_two").get<int>();
    p.params.level = j.at("level").get<int>();
    p.params.a = parse_rational(j.at("a").get<std::string>());
    p.coefficients = Polynomial(complex_vector_from_json(j.at("coefficients")));
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed polynomial record: ") + e.what());
  }
  p.params.validate();
  if (p.coefficients.degree_bound() != p.params.degree()) throw DomainError("polynomial length does not match k");
  return p;
}

Complex phi_kernel(const KernelParams& p, Complex z, Complex w) {
  const double k = p.k();
  const double n_level = p.level;
  const double a = p.a_value();
  const int D = p.degree();
  const Complex second = p.second_term_sign * i_pow(k) * std::pow(n_level, -0.25);
  Complex sum = 0.0;
  for (int n = 0; n <= D; ++n) {
    sum += binom_general(k - 2.0, n) * cpow(kI * n_level * z, double(n)) * cpow(w, a - n);
    sum += second * binom_general(k - 2.0, n + 0.5) * cpow(kI * z, double(n)) *
           cpow(-n_level * w, 2.0 * k - 4.5 - a - n);
  }
  return sum;
}

TransfReport verify_kernel_symmetry(const KernelParams& p, int samples, double tol, unsigned long seed) {
  p.validate();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-1.0, 1.0), im(0.2, 2.0);
  const double rt = std::sqrt(double(p.level));
  TransfReport r;
  r.samples = samples;
  r.tol = tol;
  for (int j = 0; j < samples; ++j) {
    const Complex z(re(rng), im(rng)), w(re(rng), im(rng));
    const Complex wz = -1.0 / (double(p.level) * z), ww = -1.0 / (double(p.level) * w);
    const Complex lhs = -cpow(kI * rt * z, p.k() - 2.5) * cpow(-kI * rt * w, p.k() - 2.0) * phi_kernel(p, wz, ww);
    const Complex rhs = phi_kernel(p, z, w);
    r.max_rel_error = std::max(r.max_rel_error, std::abs(lhs - rhs) / std::abs(rhs));
  }
  r.pass = r.max_rel_error < tol;
  return r;
}

PeriodPolynomial period_polynomial_from_lvalues(const LSeriesEvaluator& ev, const KernelParams& p) {
  p.validate();
  const double k = p.k();
  const double n_level = p.level;
  const double a = p.a_value();
  const int D = p.degree();
  if (ev.form().weight_times_two != p.k_times_two) throw DomainError("form weight does not match kernel weight");
  Polynomial out = Polynomial::zero(D);
  const Complex front = i_pow(a + 1.0);
  for (int n = 0; n <= D; ++n) {
    Complex first = binom_general(k - 2.0, n) * std::pow(n_level, n) * ev.lambda(a + 1.0 - n).value;
    Complex second = binom_general(k - 2.0, n + 0.5) * std::pow(n_level, 2.0 * k - a - n - 4.75) *
                     i_pow(2.0 * n - k + 0.5) * ev.lambda(2.0 * k - 3.5 - a - n).value;
    out[n] = front * (first + second);
  }
  return {out, p};
}

QuadraturePeriod period_polynomial_by_quadrature(const FourierExpansion& f, const KernelParams& p,
                                                 const Precision& prec) {
  p.validate();
  if (f.weight_times_two != p.k_times_two) throw DomainError("form weight does not match kernel weight");
  const int D = p.degree();
  const double t0 = 1.0 / std::sqrt(double(f.reflection_level()));
  std::vector<Complex> nodes, values;
  QuadraturePeriod out;
  for (int j = 0; j <= D; ++j) {
    const Complex z = std::polar(1.0, 2.0 * kPi * (j + 0.25) / (D + 1));
    auto integrand = [&](double t) { return evaluate_extended(f, Complex(0.0, t)).value * phi_kernel(p, z, Complex(0.0, t)) * kI; };
    QuadResult lo = integrate_interval(integrand, 0.0, t0, prec);
    QuadResult hi = integrate_vertical(integrand, t0, prec);
    nodes.push_back(z);
    values.push_back(lo.value + hi.value);
    out.max_abs_error = std::max(out.max_abs_error, lo.abs_error + hi.abs_error);
  }
  out.polynomial = {interpolate(nodes, values), p};
  return out;
}

QuadResult eichler_integral_F(const FourierExpansion& f, const KernelParams& p, Complex z, const Precision& prec) {
  if (!(z.imag() > 0.0)) throw DomainError("Eichler integral needs z in the upper half-plane");
  Precision q = prec;
  q.target_rel_tol = std::min(prec.target_rel_tol, 1e-12);
  auto integrand = [&](double t) {
    Complex w = z + kI * t;
    return evaluate_extended(f, w).value * phi_kernel(p, z, w) * kI;
  };
  return integrate_vertical(integrand, 0.0, q);
}

Polynomial slash_polynomial(const Polynomial& P, const GroupElement& gamma, int weight, const Character& chi) {
  if (weight > 0) throw DomainError("polynomial slash needs a non-positive integer weight");
  const int D = -weight;
  if (P.degree_bound() > D) throw DomainError("polynomial degree exceeds -weight");
  const Polynomial numer({Complex(gamma.b()), Complex(gamma.a())});
  const Polynomial denom({Complex(gamma.d()), Complex(gamma.c())});
  std::vector<Polynomial> numer_pow{Polynomial({1.0})}, denom_pow{Polynomial({1.0})};
  for (int j = 1; j <= D; ++j) {
    numer_pow.push_back(numer_pow.back().times(numer));
    denom_pow.push_back(denom_pow.back().times(denom));
  }
  Polynomial out = Polynomial::zero(D);
  for (int j = 0; j <= P.degree_bound(); ++j) {
    if (P[j] == Complex(0.0)) continue;
    Polynomial term = numer_pow[j].times(denom_pow[D - j]);
    term *= P[j];
    out += term;
  }
  std::vector<Complex> c = out.coefficients();
  c.resize(D + 1);
  Polynomial result(std::move(c));
  if (!chi.is_trivial()) result *= std::conj(chi(gamma));
  return result;
}

EichReport verify_theorem_eich_i(const FourierExpansion& f, const PeriodPolynomial& P, const std::vector<Complex>& samples,
                                 const Character& chi, double tol, double peri_tol, bool general_mode) {
  const KernelParams& p = P.params;
  p.validate();
  const int D = p.degree();
  if (D % 4 != 0 && !general_mode) {
    throw DomainError("default mode needs 4 | (k - 5/2); enable the calibrated general mode");
  }
  if (samples.empty()) throw DomainError("Eichler-integral check needs at least one sample");
  EichReport report;
  report.tol = tol;
  const double n_level = p.level;
  for (Complex z : samples) {
    EichRow row;
    row.z = z;
    row.F = eichler_integral_F(f, p, z).value;
    Complex wz = -1.0 / (n_level * z);
    row.F_slash_W = cpow(std::sqrt(n_level) * z, double(D)) * eichler_integral_F(f, p, wz).value;
    row.P = P.coefficients(z);
    report.rows.push_back(row);
  }
  report.slash_constant = i_pow(double(D));
  if (D % 4 != 0) {
    const EichRow& first = report.rows.front();
    report.slash_constant = (first.F - first.P) / first.F_slash_W;
    report.calibrated = true;
  }
  for (std::size_t j = report.calibrated ? 1 : 0; j < report.rows.size(); ++j) {
    EichRow& row = report.rows[j];
    row.residual = std::abs(row.F - report.slash_constant * row.F_slash_W - row.P);
    report.max_residual = std::max(report.max_residual, row.residual);
  }
  GroupElement w = GroupElement::fricke_involution(p.level);
  Polynomial peri = std::conj(chi.value_W) * slash_polynomial(P.coefficients, w, -D) + P.coefficients;
  report.peri_norm = peri.norm();
  double scale = P.coefficients.max_abs();
  report.peri_relative = scale > 0.0 ? report.peri_norm / scale : 0.0;
  report.pass = report.max_residual <= tol && report.peri_relative <= peri_tol;
  return report;
}

QuadResult psi_infty(const FourierExpansion& f, double x, const Precision& prec) {
  if (!(x > 0.0)) throw DomainError("psi_infty needs x > 0");
  const double k = f.weight();
  auto integrand = [&](double t) { return evaluate_extended(f, kI * t).value * cpow(kI * t - x, k - 2.0) * kI; };
  double split = f.fricke_eigenvalue ? 1.0 / std::sqrt(double(f.reflection_level())) : 1.0;
  Precision q = prec;
  q.target_rel_tol = std::min(prec.target_rel_tol, 1e-12);
  QuadResult lower = integrate_interval(integrand, 0.0, split, q);
  QuadResult upper = integrate_vertical(integrand, split, q);
  return {lower.value + upper.value, lower.abs_error + upper.abs_error, lower.evaluations + upper.evaluations};
}

BrugReport verify_prop_brug(const LSeriesEvaluator& ev, const std::vector<double>& x_grid, double tol_factor) {
  const FourierExpansion& f = ev.form();
  KernelParams p;
  p.k_times_two = f.weight_times_two;
  p.level = f.reflection_level();
  p.a = Rational(f.weight_times_two - 4, 2);
  PeriodPolynomial P = period_polynomial_from_lvalues(ev, p);
  const double k = p.k();
  const double n_level = p.level;
  const int D = p.degree();
  BrugReport report;
  report.tol_factor = tol_factor;
  for (double x : x_grid) {
    if (!(x > 1.0)) throw DomainError("psi comparison grid must lie in (1, infinity)");
    BrugRow row;
    row.x = x;
    row.lhs = P.coefficients(kI * x);
    row.rhs = psi_infty(f, n_level * x).value -
              i_pow(1.0 - 2.0 * k) * psi_infty(f, 1.0 / x).value * std::pow(std::sqrt(n_level) * x, D);
    row.remainder = row.lhs - row.rhs;
    row.ratio = std::abs(row.remainder) / std::pow(x, k - 1.5);
    report.rows.push_back(row);
  }
  report.pass = true;
  if (!report.rows.empty()) {
    double first = report.rows.front().ratio;
    for (const auto& row : report.rows) {
      if (first > 0.0) {
        report.max_ratio_over_first = std::max(report.max_ratio_over_first, row.ratio / first);
      } else if (row.ratio > 0.0) {
        report.max_ratio_over_first = std::numeric_limits<double>::infinity();
      }
    }
    report.pass = report.max_ratio_over_first <= tol_factor;
  }
  return report;
}

}  // namespace halfint
