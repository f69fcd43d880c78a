#include "halfint/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "halfint/errors.hpp"

namespace halfint {

namespace {

constexpr double kTiny = 1e-300;

// Lanczos g = 7, n = 9.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool near_nonpositive_integer(Complex z) {
  return z.real() <= 0.5 && std::abs(z.imag()) < 1e-14 &&
         std::abs(z.real() - std::round(z.real())) < 1e-14;
}

template <class T>
T gamma_of(T s) {
  if constexpr (std::is_same_v<T, double>) {
    return std::tgamma(s);
  } else {
    return gamma_complex(s);
  }
}

template <class T>
T power_of(double x, T s) {
  if constexpr (std::is_same_v<T, double>) {
    return std::pow(x, s);
  } else {
    return std::exp(s * std::log(x));
  }
}

// x^s e^{-x} sum x^n / (s (s+1) ... (s+n)), the lower incomplete gamma.
template <class T>
T lower_series(T s, double x, const Precision& prec) {
  T term = T(1) / s;
  T sum = term;
  for (int n = 1; n < prec.max_terms; ++n) {
    term *= x / (s + double(n));
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-17) {
      return sum * power_of(x, s) * std::exp(-x);
    }
  }
  throw AccuracyError("incomplete gamma series did not converge", Complex(sum * power_of(x, s) * std::exp(-x)),
                      std::abs(term));
}

// Modified Lentz evaluation of e^{-x} x^s / (x+1-s- 1(1-s)/(x+3-s- ...)).
template <class T>
T upper_fraction(T s, double x, const Precision& prec) {
  T b = x + 1.0 - s;
  T c = T(1.0 / kTiny);
  T d = T(1) / b;
  T h = d;
  for (int n = 1; n < prec.max_terms; ++n) {
    T an = -double(n) * (double(n) - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = T(1) / d;
    T delta = d * c;
    h *= delta;
    if (std::abs(delta - T(1)) < 1e-16) {
      return h * power_of(x, s) * std::exp(-x);
    }
  }
  throw AccuracyError("incomplete gamma continued fraction did not converge", Complex(h * power_of(x, s) * std::exp(-x)),
                      std::numeric_limits<double>::infinity());
}

// E_1(x) for small x.
double exponential_integral_small(double x, const Precision& prec) {
  constexpr double euler_gamma = 0.57721566490153286061;
  double sum = 0.0;
  double term = 1.0;
  for (int n = 1; n < prec.max_terms; ++n) {
    term *= -x / n;
    double add = term / n;
    sum += add;
    if (std::abs(add) < 1e-17 * std::abs(sum)) break;
  }
  return -euler_gamma - std::log(x) - sum;
}

template <class T>
T upper_gamma(T s, double x, const Precision& prec) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError("incomplete gamma: x must be finite and non-negative");
  }
  if (x == 0.0) {
    if (std::real(s) <= 0.0) {
      throw DomainError("incomplete gamma: x = 0 requires Re(s) > 0");
    }
    return gamma_of(s);
  }
  if (x >= std::real(s) + 1.0) {
    return upper_fraction(s, x, prec);
  }
  if (std::real(s) > 0.0) {
    return gamma_of(s) - lower_series(s, x, prec);
  }
  if (std::abs(s) < 1e-15) {
    return T(exponential_integral_small(x, prec));
  }
  // Re(s) in (-1, 0]: step up once, Gamma(s,x) = (Gamma(s+1,x) - x^s e^{-x}) / s.
  return (upper_gamma(s + 1.0, x, prec) - power_of(x, s) * std::exp(-x)) / s;
}

// Value of b1 + a2/(b2 + a3/(b3 + ...)) for a_n = -n(n - 1/2), b_n = w + 2n + 1/2.
Complex half_fraction_tail(Complex w, const Precision& prec) {
  Complex f = w + 2.5;
  Complex c = f;
  Complex d = 0.0;
  for (int n = 2; n < prec.max_terms; ++n) {
    double an = -double(n) * (double(n) - 0.5);
    Complex bn = w + (2.0 * n + 0.5);
    d = bn + an * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = bn + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    Complex delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) return f;
  }
  throw AccuracyError("Gamma(1/2, w) continued fraction did not converge", f, std::numeric_limits<double>::infinity());
}

// tau such that Gamma(1/2, w) = e^{-w} w^{1/2} / (w + 1/2 + tau).
Complex half_fraction_tau(Complex w, const Precision& prec) {
  return -0.5 / half_fraction_tail(w, prec);
}

constexpr double kHalfSeriesRadius = 1.5;

}  // namespace

void Precision::validate() const {
  if (!(target_abs_tol > 0.0) || !(target_rel_tol > 0.0)) {
    throw DomainError("precision tolerances must be positive");
  }
  if (max_terms < 16) throw DomainError("max_terms must be at least 16");
  if (max_quad_depth < 1) throw DomainError("max_quad_depth must be positive");
}

double gamma_real(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("gamma_real: argument must be positive, got " + std::to_string(x));
  }
  return std::tgamma(x);
}

Complex gamma_complex(Complex z) {
  if (near_nonpositive_integer(z)) {
    throw DomainError("gamma_complex: pole at non-positive integer");
  }
  if (z.real() < 0.5) {
    return kPi / (std::sin(kPi * z) * gamma_complex(1.0 - z));
  }
  z -= 1.0;
  Complex x = kLanczos[0];
  for (std::size_t j = 1; j < kLanczos.size(); ++j) {
    x += kLanczos[j] / (z + double(j));
  }
  Complex t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

double binom_general(double z, double w) {
  auto pole = [](double v) { return v <= 0.0 && v == std::round(v); };
  if (pole(z + 1.0) || pole(w + 1.0) || pole(z - w + 1.0)) {
    throw DomainError("binom_general: gamma pole");
  }
  if (z == std::round(z) && w == std::round(w) && z >= 0 && w >= 0 && w <= z) {
    double r = 1.0;
    for (int j = 1; j <= int(w); ++j) r = r * (z - w + j) / j;
    return std::round(r);
  }
  return std::tgamma(z + 1.0) / (std::tgamma(w + 1.0) * std::tgamma(z - w + 1.0));
}

double incomplete_gamma_upper(double s, double x, const Precision& prec) {
  return upper_gamma<double>(s, x, prec);
}

Complex incomplete_gamma_upper(Complex s, double x, const Precision& prec) {
  if (s.imag() == 0.0) return upper_gamma<double>(s.real(), x, prec);
  return upper_gamma<Complex>(s, x, prec);
}

Complex incomplete_gamma_half_complex(Complex w, const Precision& prec) {
  if (!(w.real() > 0.0)) {
    throw DomainError("incomplete_gamma_half_complex: Re(w) must be positive");
  }
  if (w.imag() == 0.0) return incomplete_gamma_upper(0.5, w.real(), prec);
  if (std::abs(w) < kHalfSeriesRadius) {
    Complex term = 2.0;
    Complex sum = term;
    for (int n = 1; n < prec.max_terms; ++n) {
      term *= w / (n + 0.5);
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return std::sqrt(kPi) - std::sqrt(w) * std::exp(-w) * sum;
  }
  Complex tau = half_fraction_tau(w, prec);
  return std::exp(-w) * std::sqrt(w) / (w + 0.5 + tau);
}

Complex scaled_gamma_half_remainder(Complex w, const Precision& prec) {
  if (!(w.real() > 0.0)) {
    throw DomainError("scaled_gamma_half_remainder: Re(w) must be positive");
  }
  if (std::abs(w) < kHalfSeriesRadius) {
    return std::exp(w) * incomplete_gamma_half_complex(w, prec) - 1.0 / std::sqrt(w);
  }
  Complex tau = half_fraction_tau(w, prec);
  return (-0.5 - tau) / (std::sqrt(w) * (w + 0.5 + tau));
}

Complex cpow(Complex z, double e) {
  if (z == Complex(0.0)) {
    if (e == 0.0) return 1.0;
    if (e > 0.0) return 0.0;
    throw DomainError("cpow: zero base with non-positive exponent");
  }
  if (e == std::round(e) && std::abs(e) <= 64) {
    int n = int(e);
    Complex base = n >= 0 ? z : 1.0 / z;
    Complex r = 1.0;
    for (int j = 0; j < std::abs(n); ++j) r *= base;
    return r;
  }
  return std::exp(e * std::log(z));
}

Complex cpow(Complex z, Complex e) {
  if (e.imag() == 0.0) return cpow(z, e.real());
  if (z == Complex(0.0)) {
    if (e.real() > 0.0) return 0.0;
    throw DomainError("cpow: zero base with exponent of non-positive real part");
  }
  return std::exp(e * std::log(z));
}

Complex cpow(double x, Complex e) { return cpow(Complex(x, 0.0), e); }

Complex i_pow(double e) {
  if (e == std::round(e)) {
    long m = ((long(e) % 4) + 4) % 4;
    static constexpr std::array<Complex, 4> units = {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
    return units[m];
  }
  double r = std::fmod(e, 4.0);
  return std::polar(1.0, kPi * r / 2.0);
}

}  // namespace halfint
