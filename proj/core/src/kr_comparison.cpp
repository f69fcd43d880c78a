#include "halfint/kr_comparison.hpp"

#include <algorithm>
#include <cmath>

#include "halfint/errors.hpp"

namespace halfint {

namespace {

double weight_of(const KREvaluator& ev) { return ev.form().weight(); }

// e^w Gamma(1/2, w) - w^{-1/2} for the n-th term
Complex remainder_term(Complex z, int n) { return scaled_gamma_half_remainder(Complex(0.0, -2.0 * kPi * n) * z); }

}  // namespace

KREvaluator::KREvaluator(LSeriesEvaluator ev, int truncation) : ev_(std::move(ev)), truncation_(truncation) {
  const FourierExpansion& f = ev_.form();
  if (!f.half_integral()) throw DomainError("KR comparison needs half-integral weight");
  if (f.width() != 1.0) throw DomainError("KR comparison needs cusp width 1");
  if (f.weight() < 2.5) throw DomainError("KR comparison needs k >= 5/2");
  if (truncation < 50) throw DomainError("KR truncation must be at least 50");
  if (truncation > f.truncation()) throw DomainError("KR truncation exceeds the stored coefficients");
}

double kr_term_envelope(const KREvaluator& ev, Complex z, int n) {
  return std::pow(double(n), 1.0 - weight_of(ev)) * std::abs(remainder_term(z, n));
}

KRValue kr_eichler(const KREvaluator& ev, Complex z) {
  if (!(z.imag() > 0.0)) throw DomainError("kr_eichler needs Im z > 0");
  const FourierExpansion& f = ev.form();
  const double k = f.weight();
  const int M = ev.truncation();
  Complex sum = 0.0;
  for (int n = 1; n <= M; ++n) {
    Complex a = f.a(n);
    if (a == Complex(0.0)) continue;
    sum += a * std::pow(double(n), 1.0 - k) * remainder_term(z, n);
  }
  KRValue out;
  out.value = sum / std::sqrt(kPi);
  // |remainder(w)| <= |w|^{-3/2} (1/2 + 3/(4|w|)) / cos(arg w / 2)^3 and |a(n)| <= C n^{k/2}:
  // the tail is dominated by C' int_M^inf n^{-k/2-1/2} dn.
  const double C = coefficient_growth_constant(f);
  const double r = 2.0 * kPi * std::abs(z) * (M + 1);
  const double c = std::cos(0.5 * std::arg(Complex(0.0, -1.0) * z));
  const double lead = (0.5 + 0.75 / r) / std::pow(std::max(c, 1e-3), 3.0) * std::pow(2.0 * kPi * std::abs(z), -1.5);
  const double e = k / 2.0 - 0.5;
  out.tail_bound = C * lead * std::pow(double(M), -e) / e / std::sqrt(kPi);
  return out;
}

KReichReport verify_kreich(const KREvaluator& ev, const std::vector<Complex>& samples, double tol, KRSign sign) {
  const FourierExpansion& f = ev.form();
  const double k = f.weight();
  const double N = ev.lseries().reflection_level();
  const int terms = (f.weight_times_two - 3) / 2 + 1;
  const double pm = sign == KRSign::Corrected ? -1.0 : 1.0;

  std::vector<Complex> L_int(terms), L_half(terms);
  for (int n = 0; n < terms; ++n) {
    L_int[n] = ev.lseries().dirichlet(k - n - 1.0).value;
    L_half[n] = ev.lseries().dirichlet(k - n - 0.5).value;
  }

  KReichReport rep;
  rep.sign = sign;
  rep.rhs_terms = terms;
  rep.tol = tol;
  for (Complex z : samples) {
    if (!(z.imag() > 0.0)) throw DomainError("KR sample points need Im z > 0");
    KRRow row;
    row.z = z;
    const Complex e_z = kr_eichler(ev, z).value;
    const Complex e_w = cpow(-kI * std::sqrt(N) * z, k - 2.0) * kr_eichler(ev, -1.0 / (N * z)).value;
    row.lhs = e_z - e_w;
    const Complex Z = 2.0 * kPi * z / kI;
    const Complex Z_half = cpow(Z, -0.5);
    Complex Zn = 1.0;
    for (int n = 0; n < terms; ++n) {
      row.rhs += (L_int[n] / std::tgamma(n + 1.0) + pm * L_half[n] / std::tgamma(n + 0.5) * Z_half) * Zn;
      Zn *= Z;
    }
    const double scale = std::abs(e_z) + std::abs(e_w);
    row.rel_residual = std::abs(row.lhs - row.rhs) / (scale > 0.0 ? scale : 1.0);
    rep.max_rel_residual = std::max(rep.max_rel_residual, row.rel_residual);
    rep.rows.push_back(row);
  }
  rep.pass = !rep.rows.empty() && rep.max_rel_residual < tol;
  return rep;
}

Complex alpha_k(int k_times_two) {
  if (k_times_two % 2 == 0 || k_times_two < 5) throw DomainError("alpha_k needs half-integral k >= 5/2");
  const double k = k_times_two / 2.0;
  const int D = (k_times_two - 5) / 2;
  return cpow(Complex(0.0, -2.0 * kPi), k - 1.0) / (std::sqrt(kPi) * std::tgamma(D + 1.0));
}

QuadResult kr_inner_integral(const FourierExpansion& f, Complex w, const Precision& prec) {
  if (!(w.imag() > 0.0)) throw DomainError("kr_inner_integral needs Im w > 0");
  const double k = f.weight();
  auto integrand = [&](double x) -> Complex {
    return evaluate_extended(f, x * w).value * std::pow(x, k - 1.5) / std::sqrt(x + 1.0);
  };
  const double split = 1.0 / std::abs(w);
  QuadResult lo = integrate_interval(integrand, 0.0, split, prec);
  VerticalOptions opts;
  opts.first_panel = split;
  QuadResult hi = integrate_vertical(integrand, split, prec, opts);
  QuadResult out;
  out.value = lo.value + hi.value;
  out.abs_error = lo.abs_error + hi.abs_error;
  out.evaluations = lo.evaluations + hi.evaluations;
  return out;
}

KRIntegralReport kr_integral_representation(const KREvaluator& ev, Complex z, double tol, KRRootForm root) {
  if (!(z.imag() > 0.0)) throw DomainError("kr_integral_representation needs Im z > 0");
  const FourierExpansion& f = ev.form();
  const double k = f.weight();
  const int D = (f.weight_times_two - 5) / 2;
  Precision inner_prec = ev.lseries().precision();
  inner_prec.target_abs_tol = std::min(inner_prec.target_abs_tol, 1e-15);

  double inner_err = 0.0;
  // int_z^{i inf} F(w)(w - z)^D dw = i int_0^inf F(z + i t)(i t)^D dt
  auto outer = [&](double t) -> Complex {
    QuadResult F = kr_inner_integral(f, z + kI * t, inner_prec);
    const Complex p = cpow(kI * t, double(D));
    inner_err = std::max(inner_err, F.abs_error * std::abs(p));
    return kI * F.value * p;
  };
  QuadResult I = integrate_half_line_algebraic(outer, ev.lseries().precision());

  const Complex r = root == KRRootForm::Principal ? std::sqrt(z) : std::sqrt(-kI * z);
  const Complex L = ev.lseries().dirichlet(k - 0.5).value;
  KRIntegralReport rep;
  rep.z = z;
  rep.root = root;
  rep.tol = tol;
  rep.integral = alpha_k(f.weight_times_two) * r * I.value - L / std::sqrt(Complex(0.0, -2.0 * kPi * kPi) * z);
  rep.quadrature_error = std::abs(alpha_k(f.weight_times_two) * r) * (I.abs_error + inner_err);
  rep.series = kr_eichler(ev, z).value;
  rep.rel_deviation = std::abs(rep.integral - rep.series) / std::max(std::abs(rep.series), 1e-300);
  rep.pass = rep.rel_deviation < tol;
  return rep;
}

Json kreich_report_to_json(const KReichReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"z", complex_to_json(row.z)},
                    {"lhs", complex_to_json(row.lhs)},
                    {"rhs", complex_to_json(row.rhs)},
                    {"rel_residual", row.rel_residual}});
  }
  return {{"sign", r.sign == KRSign::Corrected ? "corrected" : "as_printed"},
          {"rhs_terms", r.rhs_terms},
          {"rows", rows},
          {"max_rel_residual", r.max_rel_residual},
          {"tol", r.tol},
          {"pass", r.pass}};
}

Json kr_integral_report_to_json(const KRIntegralReport& r) {
  return {{"z", complex_to_json(r.z)},
          {"series", complex_to_json(r.series)},
          {"integral", complex_to_json(r.integral)},
          {"quadrature_error", r.quadrature_error},
          {"rel_deviation", r.rel_deviation},
          {"root", r.root == KRRootForm::Principal ? "principal" : "as_printed"},
          {"tol", r.tol},
          {"pass", r.pass}};
}

}  // namespace halfint
