#pragma once

#include <complex>

namespace halfint {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

struct Precision {
  double target_abs_tol = 1e-13;
  double target_rel_tol = 1e-13;
  int max_terms = 4000;
  int max_quad_depth = 2000;

  void validate() const;
};

double gamma_real(double x);
Complex gamma_complex(Complex z);

// Gamma(z+1) / (Gamma(w+1) Gamma(z-w+1)).
double binom_general(double z, double w);

// Upper incomplete gamma for real order; series below x = s + 1, continued fraction above.
double incomplete_gamma_upper(double s, double x, const Precision& prec = {});

// Complex order, real argument x > 0. Used for Lambda at complex s.
Complex incomplete_gamma_upper(Complex s, double x, const Precision& prec = {});

// Gamma(1/2, w) for Re w > 0.
Complex incomplete_gamma_half_complex(Complex w, const Precision& prec = {});

// e^w Gamma(1/2, w) - w^{-1/2}, computed without the leading cancellation.
Complex scaled_gamma_half_remainder(Complex w, const Precision& prec = {});

// Principal branch z^e = exp(e Log z), with 0^e = 0 for Re e > 0.
Complex cpow(Complex z, double e);
Complex cpow(Complex z, Complex e);
Complex cpow(double x, Complex e);

// i^e on the principal branch.
Complex i_pow(double e);

}  // namespace halfint
