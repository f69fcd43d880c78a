#pragma once

#include <vector>

#include "halfint/modular_forms.hpp"
#include "halfint/special_functions.hpp"

namespace halfint {

struct LValue {
  Complex value{0.0, 0.0};
  double abs_err_bound = 0.0;
};

class LSeriesEvaluator {
 public:
  explicit LSeriesEvaluator(FourierExpansion form, Precision prec = {});

  const FourierExpansion& form() const { return form_; }
  Complex fricke_eigenvalue() const { return eps_; }
  double split_height() const { return t0_; }
  double weight() const { return form_.weight(); }
  double reflection_level() const { return n_; }
  const Precision& precision() const { return prec_; }

  // Completed L-value, split at t0 = 1/sqrt(N).
  LValue lambda(Complex s) const;
  // Same integral split at an arbitrary height t1 > 0; equals lambda(s) exactly when the Fricke data is right.
  LValue lambda_split(Complex s, double t1) const;
  // Dirichlet series L(s) = Lambda(s) (2 pi)^s / (Gamma(s) lambda^s), real s > 0.
  LValue dirichlet(double s) const;

 private:
  // sum_n a_n (lambda / 2 pi n)^s Gamma(s, 2 pi n t / lambda), with a tail bound.
  LValue tail_sum(Complex s, double t) const;

  FourierExpansion form_;
  Complex eps_;
  double n_;
  double width_;
  double t0_;
  double growth_;
  Precision prec_;
};

inline LValue lambda_value(const LSeriesEvaluator& ev, Complex s) { return ev.lambda(s); }

struct FunctionalEquationRow {
  Complex s;
  Complex lhs;
  Complex rhs;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
};

struct FunctionalEquationReport {
  std::vector<FunctionalEquationRow> rows;
  double max_abs_residual = 0.0;
  double max_rel_residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

// Checks Lambda(s) = eps N^{k/2-s} Lambda(k-s); both sides are computed with an off-centre split
// so that a wrong eigenvalue shows up as an order-one residual.
FunctionalEquationReport verify_functional_equation(const LSeriesEvaluator& ev, const std::vector<Complex>& s_grid,
                                                    double tol);

}  // namespace halfint
