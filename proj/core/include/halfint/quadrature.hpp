#pragma once

#include <functional>
#include <limits>

#include "halfint/special_functions.hpp"

namespace halfint {

using RealToComplex = std::function<Complex(double)>;

struct QuadResult {
  Complex value{0.0, 0.0};
  double abs_error = 0.0;
  int evaluations = 0;
};

// Globally adaptive Gauss-Kronrod 7/15 on a finite interval.
// Stops when the error estimate is below max(abs_tol, rel_tol*|I|).
QuadResult integrate_interval(const RealToComplex& fn, double a, double b, const Precision& prec = {});

struct VerticalOptions {
  double first_panel = 0.25;
  double growth = 1.5;
  // Hard ceiling on the height; reaching it with a non-negligible tail is an accuracy error.
  double max_height = std::numeric_limits<double>::infinity();
};

// Integral of fn over [t0, infinity) for exponentially decaying fn.
// Panels of growing length are added until two consecutive panels are negligible.
QuadResult integrate_vertical(const RealToComplex& fn, double t0, const Precision& prec = {},
                              const VerticalOptions& opts = {});

// Integral over [0, infinity) for integrands decaying only polynomially: t = u/(1-u).
QuadResult integrate_half_line_algebraic(const RealToComplex& fn, const Precision& prec = {});

}  // namespace halfint
