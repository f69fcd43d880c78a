#include "halfint/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "halfint/errors.hpp"

namespace halfint {

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  Complex value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const RealToComplex& fn, double a, double b) {
  double center = 0.5 * (a + b);
  double half = 0.5 * (b - a);
  Complex fc = fn(center);
  Complex kronrod = fc * kWgk[7];
  Complex gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    double dx = half * kXgk[j];
    Complex f1 = fn(center - dx);
    Complex f2 = fn(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadResult integrate_interval(const RealToComplex& fn, double a, double b, const Precision& prec) {
  QuadResult out;
  if (a == b) return out;
  std::priority_queue<Panel> queue;
  Panel first = gauss_kronrod(fn, a, b);
  out.evaluations = 15;
  queue.push(first);
  Complex total = first.value;
  double error = first.error;
  int splits = 0;
  while (error > std::max(prec.target_abs_tol, prec.target_rel_tol * std::abs(total))) {
    if (splits >= prec.max_quad_depth) {
      throw AccuracyError("adaptive quadrature did not converge", total, error);
    }
    Panel worst = queue.top();
    queue.pop();
    double mid = 0.5 * (worst.a + worst.b);
    Panel left = gauss_kronrod(fn, worst.a, mid);
    Panel right = gauss_kronrod(fn, mid, worst.b);
    out.evaluations += 30;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++splits;
    // Error bookkeeping by differences can drift; recompute occasionally.
    if (splits % 64 == 0) {
      auto copy = queue;
      total = 0.0;
      error = 0.0;
      while (!copy.empty()) {
        total += copy.top().value;
        error += copy.top().error;
        copy.pop();
      }
    }
  }
  out.value = total;
  out.abs_error = error;
  return out;
}

QuadResult integrate_vertical(const RealToComplex& fn, double t0, const Precision& prec, const VerticalOptions& opts) {
  QuadResult out;
  double a = t0;
  double h = opts.first_panel;
  int quiet = 0;
  Precision panel_prec = prec;
  while (quiet < 2) {
    if (a >= opts.max_height) {
      throw AccuracyError("vertical integral: integrand not negligible at maximum height", out.value, out.abs_error);
    }
    double b = std::min(a + h, opts.max_height);
    panel_prec.target_abs_tol = 0.25 * prec.target_abs_tol;
    QuadResult piece = integrate_interval(fn, a, b, panel_prec);
    out.value += piece.value;
    out.abs_error += piece.abs_error;
    out.evaluations += piece.evaluations;
    double scale = std::max(prec.target_abs_tol, prec.target_rel_tol * std::abs(out.value));
    quiet = std::abs(piece.value) < 0.1 * scale ? quiet + 1 : 0;
    a = b;
    h *= opts.growth;
  }
  return out;
}

QuadResult integrate_half_line_algebraic(const RealToComplex& fn, const Precision& prec) {
  auto mapped = [&fn](double u) -> Complex {
    if (u >= 1.0) return 0.0;
    double one_minus = 1.0 - u;
    double t = u / one_minus;
    return fn(t) / (one_minus * one_minus);
  };
  return integrate_interval(mapped, 0.0, 1.0, prec);
}

}  // namespace halfint
