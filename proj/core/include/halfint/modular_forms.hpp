#pragma once

#include <boost/rational.hpp>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "halfint/group_words.hpp"
#include "halfint/special_functions.hpp"

namespace halfint {

using Rational = boost::rational<long>;

enum class FormStatus { Unvalidated, Validated, Rejected };
std::string status_name(FormStatus s);
FormStatus parse_status(const std::string& s);

// Truncated expansion f(z) = sum_{n=1}^{M} a(n) e^{2 pi i n z / lambda}.
// fricke_eigenvalue eps means f(-1/(N z)) = eps (-i sqrt(N) z)^k f(z), N = fricke level.
struct FourierExpansion {
  int weight_times_two = 0;
  int level = 4;
  Rational cusp_width{1};
  std::vector<Complex> coefficients;
  std::optional<Complex> fricke_eigenvalue;
  int fricke_level = 0;  // 0 means "same as level"
  std::string label;
  std::string source = "ingested";
  FormStatus status = FormStatus::Unvalidated;

  double weight() const { return weight_times_two / 2.0; }
  bool half_integral() const { return weight_times_two % 2 != 0; }
  double width() const { return boost::rational_cast<double>(cusp_width); }
  int truncation() const { return int(coefficients.size()); }
  int reflection_level() const { return fricke_level ? fricke_level : level; }
  Complex a(int n) const { return n >= 1 && n <= truncation() ? coefficients[n - 1] : Complex(0.0); }

  void validate() const;
};

FourierExpansion scaled(const FourierExpansion& f, Complex c);
FourierExpansion linear_combination(const FourierExpansion& f, Complex cf, const FourierExpansion& g, Complex cg);

// g(z) = f(z / m): same coefficients, width multiplied by m, Fricke level divided by m^2.
FourierExpansion rescale_argument(const FourierExpansion& f, long m);

struct Evaluation {
  Complex value{0.0, 0.0};
  double tail_bound = 0.0;
};

// C with |a(n)| <= C n^{k/2} over the stored range.
double coefficient_growth_constant(const FourierExpansion& f);

Evaluation evaluate(const FourierExpansion& f, Complex z);
// Uses the Fricke relation when the reflected point lies higher in the upper half-plane.
Evaluation evaluate_extended(const FourierExpansion& f, Complex z);

int kronecker_symbol(long c, long d);
Complex epsilon_d(long d);

using FormFunction = std::function<Complex(Complex)>;

FormFunction as_function(const FourierExpansion& f, bool use_reflection = true);

// Slash operator on functions; half-integral weights accept Gamma_0(level) or W_level only.
FormFunction slash_function(FormFunction f, const GroupElement& gamma, int weight_times_two, int level);

// Automorphy factor j(gamma, z) such that (f|gamma)(z) = j * f(gamma z).
Complex slash_factor(const GroupElement& gamma, Complex z, int weight_times_two, int level);

struct GeneratorDeviation {
  std::string gamma;
  double max_relative_deviation = 0.0;
};

struct ModularityReport {
  std::vector<GeneratorDeviation> deviations;
  double max_tail_bound = 0.0;
  double tol = 0.0;
  bool pass = false;
};

std::vector<Complex> sample_points(int count, double im_lo = 0.5, double im_hi = 2.0);

ModularityReport check_modularity(const FourierExpansion& f, const std::vector<GroupElement>& gammas, double tol);

struct FrickeReport {
  double max_relative_deviation = 0.0;
  int samples = 0;
  double tol = 0.0;
  bool pass = false;
};

// evaluate(f, -1/(N z)) against eps (-i sqrt(N) z)^k evaluate(f, z), both by direct summation.
FrickeReport check_fricke(const FourierExpansion& f, int samples, double tol);

}  // namespace halfint
