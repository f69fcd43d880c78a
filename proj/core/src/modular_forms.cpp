#include "halfint/modular_forms.hpp"

#include <cmath>
#include <limits>

#include "halfint/errors.hpp"

namespace halfint {

std::string status_name(FormStatus s) {
  switch (s) {
    case FormStatus::Unvalidated: return "unvalidated";
    case FormStatus::Validated: return "validated";
    case FormStatus::Rejected: return "rejected";
  }
  return "unvalidated";
}

FormStatus parse_status(const std::string& s) {
  if (s == "validated") return FormStatus::Validated;
  if (s == "rejected") return FormStatus::Rejected;
  if (s == "unvalidated") return FormStatus::Unvalidated;
  throw DomainError("unknown form status '" + s + "'");
}

void FourierExpansion::validate() const {
  if (level <= 0 || level % 4 != 0) throw DomainError("form level must be a positive multiple of 4");
  if (cusp_width <= 0) throw DomainError("cusp width must be positive");
  if (coefficients.empty()) throw DomainError("form needs at least one coefficient");
  for (auto c : coefficients) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw DomainError("non-finite coefficient");
  }
  if (fricke_eigenvalue && std::abs(std::abs(*fricke_eigenvalue) - 1.0) > 1e-10) {
    throw DomainError("Fricke eigenvalue must be unimodular");
  }
  if (fricke_level < 0) throw DomainError("Fricke level must be non-negative");
}

FourierExpansion scaled(const FourierExpansion& f, Complex c) {
  FourierExpansion out = f;
  for (auto& x : out.coefficients) x *= c;
  return out;
}

FourierExpansion linear_combination(const FourierExpansion& f, Complex cf, const FourierExpansion& g, Complex cg) {
  if (f.weight_times_two != g.weight_times_two || f.cusp_width != g.cusp_width) {
    throw DomainError("linear combination needs matching weight and width");
  }
  FourierExpansion out = f;
  std::size_t m = std::min(f.coefficients.size(), g.coefficients.size());
  out.coefficients.resize(m);
  for (std::size_t j = 0; j < m; ++j) out.coefficients[j] = cf * f.coefficients[j] + cg * g.coefficients[j];
  if (f.fricke_eigenvalue != g.fricke_eigenvalue || f.reflection_level() != g.reflection_level()) {
    out.fricke_eigenvalue.reset();
  }
  out.source = "combination";
  return out;
}

FourierExpansion rescale_argument(const FourierExpansion& f, long m) {
  if (m <= 0) throw DomainError("rescale factor must be positive");
  FourierExpansion out = f;
  out.cusp_width = f.cusp_width * m;
  long n = f.reflection_level();
  if (n % (m * m) == 0) {
    out.fricke_level = int(n / (m * m));
  } else {
    out.fricke_eigenvalue.reset();
  }
  out.label = f.label + "(z/" + std::to_string(m) + ")";
  return out;
}

double coefficient_growth_constant(const FourierExpansion& f) {
  double half = f.weight() / 2.0;
  double c = 0.0;
  for (int n = 1; n <= f.truncation(); ++n) c = std::max(c, std::abs(f.a(n)) / std::pow(double(n), half));
  return c;
}

namespace {

double tail_bound(const FourierExpansion& f, double growth, double r) {
  int m = f.truncation();
  double half = f.weight() / 2.0;
  double ratio = std::pow(double(m + 2) / double(m + 1), half) * r;
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  double first = growth * std::exp(half * std::log(double(m + 1)) + (m + 1) * std::log(r));
  return first / (1.0 - ratio);
}

Evaluation evaluate_with_growth(const FourierExpansion& f, Complex z, double growth) {
  if (!(z.imag() > 0.0)) throw DomainError("evaluation point must lie in the upper half-plane");
  Complex q = std::exp(2.0 * kPi * kI * z / f.width());
  Complex acc = 0.0;
  for (int n = f.truncation(); n >= 1; --n) acc = (acc + f.a(n)) * q;
  return {acc, tail_bound(f, growth, std::abs(q))};
}

}  // namespace

Evaluation evaluate(const FourierExpansion& f, Complex z) {
  return evaluate_with_growth(f, z, coefficient_growth_constant(f));
}

Evaluation evaluate_extended(const FourierExpansion& f, Complex z) {
  if (!(z.imag() > 0.0)) throw DomainError("evaluation point must lie in the upper half-plane");
  double growth = coefficient_growth_constant(f);
  if (!f.fricke_eigenvalue) return evaluate_with_growth(f, z, growth);
  double n = f.reflection_level();
  Complex zr = -1.0 / (n * z);
  if (zr.imag() <= z.imag()) return evaluate_with_growth(f, z, growth);
  // z = -1/(N zr), so f(z) = eps (-i sqrt(N) zr)^k f(zr).
  Complex factor = *f.fricke_eigenvalue * cpow(-kI * std::sqrt(n) * zr, f.weight());
  Evaluation e = evaluate_with_growth(f, zr, growth);
  return {factor * e.value, std::abs(factor) * e.tail_bound};
}

int kronecker_symbol(long c, long d) {
  if (d == 0) return (c == 1 || c == -1) ? 1 : 0;
  int result = 1;
  if (d < 0) {
    d = -d;
    if (c < 0) result = -result;
  }
  int twos = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  if (twos > 0) {
    if (c % 2 == 0) return 0;
    long r = ((c % 8) + 8) % 8;
    if ((twos % 2 == 1) && (r == 3 || r == 5)) result = -result;
  }
  // Jacobi symbol (c/d) for odd positive d.
  long a = ((c % d) + d) % d;
  long n = d;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

Complex epsilon_d(long d) {
  if (d % 2 == 0) throw DomainError("epsilon_d requires odd d");
  return ((d % 4) + 4) % 4 == 1 ? Complex(1.0) : kI;
}

FormFunction as_function(const FourierExpansion& f, bool use_reflection) {
  if (use_reflection) return [f](Complex z) { return evaluate_extended(f, z).value; };
  return [f](Complex z) { return evaluate(f, z).value; };
}

Complex slash_factor(const GroupElement& gamma, Complex z, int weight_times_two, int level) {
  double k = weight_times_two / 2.0;
  if (weight_times_two % 2 == 0) {
    Complex j = gamma.c() * z + gamma.d();
    return cpow(j, -k);
  }
  if (gamma.is_fricke()) {
    if (gamma.fricke != level) throw DomainError("Fricke element level does not match the form level");
    return cpow(-kI * std::sqrt(double(level)) * z, -k);
  }
  if (!in_gamma0(gamma, level)) {
    throw DomainError("half-integral slash needs gamma in Gamma_0(N) or W_N, got " + gamma.to_string());
  }
  long c = gamma.m.c.convert_to<long>();
  long d = gamma.m.d.convert_to<long>();
  Complex eps = std::pow(epsilon_d(d), double(weight_times_two));
  return double(kronecker_symbol(c, d)) * eps * cpow(Complex(double(c)) * z + double(d), -k);
}

FormFunction slash_function(FormFunction f, const GroupElement& gamma, int weight_times_two, int level) {
  // Validate eagerly so that bad input fails at construction.
  (void)slash_factor(gamma, Complex(0.0, 1.0), weight_times_two, level);
  return [f = std::move(f), gamma, weight_times_two, level](Complex z) {
    return slash_factor(gamma, z, weight_times_two, level) * f(gamma.act(z));
  };
}

std::vector<Complex> sample_points(int count, double im_lo, double im_hi) {
  std::vector<Complex> out;
  const double golden = 0.6180339887498949;
  const double root2 = 0.4142135623730950;
  for (int j = 1; j <= count; ++j) {
    double x = std::fmod(j * golden, 1.0) - 0.5;
    double y = im_lo + (im_hi - im_lo) * std::fmod(j * root2, 1.0);
    out.emplace_back(x, y);
  }
  return out;
}

ModularityReport check_modularity(const FourierExpansion& f, const std::vector<GroupElement>& gammas, double tol) {
  ModularityReport report;
  report.tol = tol;
  report.pass = true;
  double growth = coefficient_growth_constant(f);
  auto points = sample_points(12);
  for (const auto& g : gammas) {
    GeneratorDeviation dev{g.to_string(), 0.0};
    for (auto z : points) {
      Evaluation fz = evaluate_with_growth(f, z, growth);
      Evaluation fgz = evaluate_with_growth(f, g.act(z), growth);
      Complex factor = slash_factor(g, z, f.weight_times_two, f.level);
      Complex slashed = factor * fgz.value;
      double scale = std::max(std::abs(fz.value), 1e-300);
      dev.max_relative_deviation = std::max(dev.max_relative_deviation, std::abs(slashed - fz.value) / scale);
      report.max_tail_bound = std::max({report.max_tail_bound, fz.tail_bound, std::abs(factor) * fgz.tail_bound});
    }
    if (!(dev.max_relative_deviation <= tol)) report.pass = false;
    report.deviations.push_back(dev);
  }
  return report;
}

FrickeReport check_fricke(const FourierExpansion& f, int samples, double tol) {
  FrickeReport report;
  report.tol = tol;
  report.samples = samples;
  if (!f.fricke_eigenvalue) throw DomainError("form has no Fricke eigenvalue");
  double n = f.reflection_level();
  double growth = coefficient_growth_constant(f);
  for (auto z : sample_points(samples, 0.3, 0.8)) {
    Complex lhs = evaluate_with_growth(f, -1.0 / (n * z), growth).value;
    Complex rhs = *f.fricke_eigenvalue * cpow(-kI * std::sqrt(n) * z, f.weight()) * evaluate_with_growth(f, z, growth).value;
    double scale = std::max(std::abs(rhs), 1e-300);
    report.max_relative_deviation = std::max(report.max_relative_deviation, std::abs(lhs - rhs) / scale);
  }
  report.pass = report.max_relative_deviation <= tol;
  return report;
}

}  // namespace halfint
