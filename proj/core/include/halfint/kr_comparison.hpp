#pragma once

#include <vector>

#include "halfint/form_io.hpp"
#include "halfint/l_series.hpp"
#include "halfint/quadrature.hpp"

namespace halfint {

// Houses the series E*_f(z) and the uncompleted L_f; the form must have width 1.
class KREvaluator {
 public:
  KREvaluator(LSeriesEvaluator ev, int truncation);

  const FourierExpansion& form() const { return ev_.form(); }
  const LSeriesEvaluator& lseries() const { return ev_; }
  int truncation() const { return truncation_; }

 private:
  LSeriesEvaluator ev_;
  int truncation_;
};

struct KRValue {
  Complex value;
  double tail_bound = 0.0;
};

// (1/sqrt(pi)) sum_n a(n) n^{1-k} (e^w Gamma(1/2, w) - w^{-1/2}), w = -2 pi i n z.
KRValue kr_eichler(const KREvaluator& ev, Complex z);
// n^{1-k} |e^w Gamma(1/2, w) - w^{-1/2}| for the n-th term without a(n).
double kr_term_envelope(const KREvaluator& ev, Complex z, int n);

enum class KRSign { Corrected, AsPrinted };

struct KRRow {
  Complex z;
  Complex lhs;
  Complex rhs;
  double rel_residual = 0.0;  // |lhs - rhs| over |E*(z)| + |(-i sqrt(N) z)^{k-2} E*(W z)|
};

struct KReichReport {
  std::vector<KRRow> rows;
  KRSign sign = KRSign::Corrected;
  int rhs_terms = 0;
  double max_rel_residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

// E*(z) - (-i sqrt(N) z)^{k-2} E*(-1/(N z)) against
// sum_{n=0}^{k-3/2} (L(k-n-1)/Gamma(n+1) -+ L(k-n-1/2)/Gamma(n+1/2) Z^{-1/2}) Z^n, Z = 2 pi z / i.
// Corrected uses the minus sign, AsPrinted the plus sign.
KReichReport verify_kreich(const KREvaluator& ev, const std::vector<Complex>& samples, double tol,
                           KRSign sign = KRSign::Corrected);

enum class KRRootForm { Principal, AsPrinted };

// (-2 pi i)^{k-1} / (sqrt(pi) (k-5/2)!)
Complex alpha_k(int k_times_two);

// F_f(w) = int_0^infinity f(x w) x^{k-3/2} (x+1)^{-1/2} dx.
QuadResult kr_inner_integral(const FourierExpansion& f, Complex w, const Precision& prec = {});

struct KRIntegralReport {
  Complex z;
  Complex series;
  Complex integral;
  double quadrature_error = 0.0;
  double rel_deviation = 0.0;
  KRRootForm root = KRRootForm::Principal;
  double tol = 0.0;
  bool pass = false;
};

// alpha_k r(z) int_z^{i infinity} F_f(w)(w - z)^{k-5/2} dw - L(k-1/2)/sqrt(-2 pi^2 i z) against the
// series, with r(z) = z^{1/2} (Principal) or (-i z)^{1/2} (AsPrinted).
KRIntegralReport kr_integral_representation(const KREvaluator& ev, Complex z, double tol,
                                            KRRootForm root = KRRootForm::Principal);

Json kreich_report_to_json(const KReichReport& r);
Json kr_integral_report_to_json(const KRIntegralReport& r);

}  // namespace halfint
