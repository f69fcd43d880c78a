#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "halfint/cocycles.hpp"
#include "halfint/form_io.hpp"
#include "halfint/l_series.hpp"
#include "halfint/period_polynomials.hpp"

namespace halfint {

// s -> Lambda(s); lets the algebraic identities run on symbolic or synthetic values.
using LambdaProvider = std::function<Complex(double)>;

LambdaProvider lambda_provider(const LSeriesEvaluator& ev);

enum class Parity { Full, Plus, Minus };

// r_{gamma,n}(g) = i^{n+1} int_0^infinity (g|gamma)(it) t^n dt for n = 0..D.
struct PeriodVector {
  CosetRep gamma = CosetRep::One;
  std::vector<Complex> r;
  Parity parity = Parity::Full;
};

// g1 is an integral-weight form on H(2) (width 2, Fricke level 1); gamma in {1, T, U}.
PeriodVector period_vector(const FourierExpansion& g1, CosetRep gamma, int degree, const Precision& prec = {});
// Keeps even n (Plus) or odd n (Minus).
PeriodVector restrict_parity(const PeriodVector& v, Parity parity);

// sum_n (-1)^n binom(D, n) r_{gamma,n} z^{D-n}.
Polynomial rho_polynomial(const PeriodVector& v);
Polynomial rho_lvalue_polynomial(const FourierExpansion& g1, CosetRep gamma, int degree, const Precision& prec = {});
InducedVector rho_induced(const FourierExpansion& g1, int k_times_two, const Precision& prec = {});

// phi(g, conj h)(W_4) through critical values; pass nullptr for a zero form.
Polynomial es_pairing_w4(const LambdaProvider* g, const LambdaProvider* h, int k_times_two);

// Left-hand sides of the pair-lift equations, n = 0..D.
std::vector<Complex> lhs_vector_theorem_coh(const LambdaProvider& lambda_f, const KernelParams& p);
std::vector<Complex> lhs_vector_theorem_coh(const LSeriesEvaluator& f, const KernelParams& p);

// Left-hand sides of the odd-lift equations, evaluated for every n (only odd n are used).
std::vector<Complex> lhs_vector_odd(const LambdaProvider& lambda_f, const KernelParams& p);

// The N = 4, a = k - 9/4 special case written with factorials, without the i-power and Gamma(k-1).
Complex specialized_lhs(const LambdaProvider& lambda_f, int k_times_two, int n);
// i^{k-5/4} Gamma(k-1): multiplies specialized_lhs into lhs_vector_theorem_coh.
Complex specialization_constant(int k_times_two);

struct LiftEquation {
  int n = 0;
  Complex lhs;
  Complex rhs;
  double residual = 0.0;
};

struct LiftSolution {
  std::vector<std::string> basis_labels;
  std::vector<Complex> g_coords;
  std::vector<Complex> h_coords;
  double residual_norm = 0.0;
  int system_rank = 0;
  double condition_estimate = 0.0;
  bool underdetermined = false;
  std::vector<LiftEquation> equations;
};

Json lift_solution_to_json(const LiftSolution& s);
LiftSolution lift_solution_from_json(const Json& j);

class InconsistentSystemError : public std::runtime_error {
 public:
  InconsistentSystemError(const std::string& what, LiftSolution s) : std::runtime_error(what), solution_(std::move(s)) {}
  const LiftSolution& solution() const { return solution_; }

 private:
  LiftSolution solution_;
};

// Least squares for g coordinates and conjugated h coordinates. With strict set, a residual above
// tol raises InconsistentSystemError; otherwise the caller inspects residual_norm.
LiftSolution solve_lift_pair(const LSeriesEvaluator& f, const KernelParams& p,
                             const std::vector<LSeriesEvaluator>& basis_g, const std::vector<LSeriesEvaluator>& basis_h,
                             double tol = 1e-6, bool strict = true);
// Same system with an explicit left-hand side (forward synthesis, zero forms).
LiftSolution solve_lift_pair(const std::vector<Complex>& lhs, int k_times_two,
                             const std::vector<LSeriesEvaluator>& basis_g, const std::vector<LSeriesEvaluator>& basis_h,
                             double tol = 1e-6, bool strict = true);
// Right-hand sides for known coordinates.
std::vector<Complex> rhs_vector_theorem_coh(int k_times_two, const std::vector<LSeriesEvaluator>& basis_g,
                                            const std::vector<Complex>& g_coords,
                                            const std::vector<LSeriesEvaluator>& basis_h,
                                            const std::vector<Complex>& h_coords);

struct BasicCheck {
  // max over odd coefficients of |rho^-_{g1}(x) - pi_f(U)(x)|, x = 1 and T
  double deviation_one = 0.0;
  double deviation_T = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct OddLiftResult {
  LiftSolution solution;
  FourierExpansion g1;  // sum_j x_j g_j(z/2), on H(2)
  BasicCheck basic;
};

OddLiftResult solve_lift_odd(const LSeriesEvaluator& f, const KernelParams& p, const std::vector<LSeriesEvaluator>& basis,
                             double tol = 1e-6, double basic_tol = 1e-6, bool strict = true);

struct SCoefficients {
  std::vector<Complex> s_one;
  std::vector<Complex> s_T;
};

// Closed-form s^-_{1,n}, s^-_{T,n} from the L-values of f.
SCoefficients s_coefficients(const LambdaProvider& lambda_f, const KernelParams& p);
// sum_j binom(n, j) (-1)^{n-j} r^-_{gamma,j}.
std::vector<Complex> binomial_transform(const PeriodVector& minus_part);

// R^+_{gamma,n} q-expansions keyed by (coset, n).
using RPlusTable = std::map<std::pair<CosetRep, int>, FourierExpansion>;

// (2/3)(2i)^{3/2-k} sum_n binom(D, n) (s_{1,n} R^+_{U,n}(2z) + s_{T,n} R^+_{1,n}(2z)).
FourierExpansion assemble_theorem_expl(const SCoefficients& s, const RPlusTable& r_plus, int k_times_two);

struct CorollaryRow {
  int n = 0;
  // Multiplied through by 2^n B_n (B_n the bracket inside C_{k,N,n}, which can vanish):
  Complex lhs;  // 2^n B_n Lambda_f(k - 5/4 - n)
  Complex rhs;  // binom(k - 5/2, n)(i^{7/4+n} + lambda_f i^{-n-1/4}) Lambda_g(k - 3/2 - n)
  double residual = 0.0;
};

struct CorollaryReport {
  Complex lambda_f;
  int extraction_n = 0;
  std::vector<CorollaryRow> rows;
  double max_residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

Complex corollary_constant(int k_times_two, int level, int n, Complex lambda_f);
CorollaryReport corollary_ratio(const LambdaProvider& lambda_f, const LambdaProvider& lambda_g, int k_times_two, int level,
                                double tol = 1e-6);

}  // namespace halfint
