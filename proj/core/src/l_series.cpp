#include "halfint/l_series.hpp"

#include <cmath>
#include <limits>

#include "halfint/errors.hpp"

namespace halfint {

LSeriesEvaluator::LSeriesEvaluator(FourierExpansion form, Precision prec) : form_(std::move(form)), prec_(prec) {
  if (!form_.fricke_eigenvalue) throw DomainError("L-series evaluation needs Fricke data for form '" + form_.label + "'");
  prec_.validate();
  eps_ = *form_.fricke_eigenvalue;
  n_ = form_.reflection_level();
  width_ = form_.width();
  t0_ = 1.0 / std::sqrt(n_);
  growth_ = coefficient_growth_constant(form_);
}

LValue LSeriesEvaluator::tail_sum(Complex s, double t) const {
  LValue out;
  double rounding = 0.0;
  for (int n = 1; n <= form_.truncation(); ++n) {
    Complex an = form_.a(n);
    if (an == Complex(0.0)) continue;
    double scale = width_ / (2.0 * kPi * n);
    Complex term = an * cpow(scale, s) * incomplete_gamma_upper(s, 2.0 * kPi * n * t / width_, prec_);
    out.value += term;
    rounding += std::abs(term);
  }
  // Terms beyond the truncation, majorized by |a_n| <= C n^{k/2} and |Gamma(s, x)| <= Gamma(Re s, x).
  double sigma = s.real();
  double half = form_.weight() / 2.0;
  auto bound = [&](int n) {
    double x = 2.0 * kPi * n * t / width_;
    return growth_ * std::pow(double(n), half) * std::pow(width_ / (2.0 * kPi * n), sigma) *
           incomplete_gamma_upper(sigma, x, prec_);
  };
  int m = form_.truncation();
  double first = bound(m + 1);
  double ratio = first > 0.0 ? bound(m + 2) / first * 1.01 : 0.0;
  double tail = ratio < 1.0 ? first / (1.0 - ratio) : std::numeric_limits<double>::infinity();
  out.abs_err_bound = tail + 1e-16 * rounding * 4.0;
  return out;
}

LValue LSeriesEvaluator::lambda_split(Complex s, double t1) const {
  if (!(t1 > 0.0)) throw DomainError("split height must be positive");
  double k = form_.weight();
  LValue upper = tail_sum(s, t1);
  LValue reflected = tail_sum(k - s, 1.0 / (n_ * t1));
  Complex factor = eps_ * cpow(n_, k / 2.0 - s);
  return {upper.value + factor * reflected.value, upper.abs_err_bound + std::abs(factor) * reflected.abs_err_bound};
}

LValue LSeriesEvaluator::lambda(Complex s) const { return lambda_split(s, t0_); }

LValue LSeriesEvaluator::dirichlet(double s) const {
  if (!(s > 0.0)) throw DomainError("Dirichlet series conversion needs s > 0");
  LValue l = lambda(s);
  double factor = std::pow(2.0 * kPi / width_, s) / gamma_real(s);
  return {l.value * factor, l.abs_err_bound * factor};
}

FunctionalEquationReport verify_functional_equation(const LSeriesEvaluator& ev, const std::vector<Complex>& s_grid,
                                                    double tol) {
  FunctionalEquationReport report;
  report.tol = tol;
  double k = ev.weight();
  double t1 = 1.25 * ev.split_height();
  for (Complex s : s_grid) {
    FunctionalEquationRow row{s, {}, {}, 0.0, 0.0};
    row.lhs = ev.lambda_split(s, t1).value;
    row.rhs = ev.fricke_eigenvalue() * cpow(ev.reflection_level(), k / 2.0 - s) * ev.lambda_split(k - s, t1).value;
    row.abs_residual = std::abs(row.lhs - row.rhs);
    double scale = std::max(std::abs(row.lhs), std::abs(row.rhs));
    row.rel_residual = scale > 0.0 ? row.abs_residual / scale : 0.0;
    report.max_abs_residual = std::max(report.max_abs_residual, row.abs_residual);
    report.max_rel_residual = std::max(report.max_rel_residual, row.rel_residual);
    report.rows.push_back(row);
  }
  report.pass = report.max_rel_residual <= tol;
  return report;
}

}  // namespace halfint
