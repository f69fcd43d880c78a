#include "halfint/lift_solver.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "halfint/errors.hpp"

namespace halfint {

namespace {

double binom_int(int n, int j) { return binom_general(double(n), double(j)); }

// Coefficients c_n of P_a, n = 0..D.
std::vector<Complex> lval_coefficients(const LambdaProvider& lambda_f, const KernelParams& p) {
  const double k = p.k(), n_level = p.level, a = p.a_value();
  const int D = p.degree();
  std::vector<Complex> c(D + 1);
  for (int j = 0; j <= D; ++j) {
    Complex first = binom_general(k - 2.0, j) * std::pow(n_level, j) * lambda_f(a + 1.0 - j);
    Complex second = binom_general(k - 2.0, j + 0.5) * std::pow(n_level, 2.0 * k - a - j - 4.75) *
                     i_pow(2.0 * j - k + 0.5) * lambda_f(2.0 * k - 3.5 - a - j);
    c[j] = i_pow(a + 1.0) * (first + second);
  }
  return c;
}

struct Solved {
  Eigen::VectorXcd x;
  int rank = 0;
  double condition = 0.0;
};

Solved least_squares(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& b) {
  Solved s;
  if (A.cols() == 0) {
    s.x = Eigen::VectorXcd(0);
    return s;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double top = sv.size() ? sv(0) : 0.0;
  svd.setThreshold(1e-12);
  s.rank = int(svd.rank());
  s.x = svd.solve(b);
  const double bottom = sv.size() ? sv(sv.size() - 1) : 0.0;
  s.condition = bottom > 0.0 ? top / bottom : std::numeric_limits<double>::infinity();
  return s;
}

LiftSolution finish(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& b, const std::vector<int>& ns,
                    const Solved& s) {
  LiftSolution out;
  out.system_rank = s.rank;
  out.condition_estimate = s.condition;
  out.underdetermined = s.rank < A.cols();
  Eigen::VectorXcd fitted = A.cols() ? Eigen::VectorXcd(A * s.x) : Eigen::VectorXcd::Zero(b.size());
  double sum = 0.0;
  for (int r = 0; r < b.size(); ++r) {
    LiftEquation e{ns[r], b(r), fitted(r), std::abs(b(r) - fitted(r))};
    sum += e.residual * e.residual;
    out.equations.push_back(e);
  }
  out.residual_norm = std::sqrt(sum);
  return out;
}

void require_residual(const LiftSolution& s, double tol, const std::string& what) {
  if (!(s.residual_norm <= tol)) {
    throw InconsistentSystemError(what + " residual " + std::to_string(s.residual_norm) + " exceeds " +
                                      std::to_string(tol),
                                  s);
  }
}

void check_kernel(const KernelParams& p) {
  p.validate();
  if (p.degree() % 4 != 0) throw DomainError("the lift needs 4 | (k - 5/2) (trivial character mode)");
}

Complex evaluate_slashed(const FourierExpansion& g1, CosetRep gamma, double t, double* tail) {
  const GroupElement x = coset_element(gamma);
  const Complex z(0.0, t);
  const Complex factor = slash_factor(x, z, g1.weight_times_two, g1.level);
  Evaluation e = evaluate_extended(g1, x.act(z));
  if (tail) *tail = std::abs(factor) * e.tail_bound;
  return factor * e.value;
}

// Walks from t = 1 by factor `step` until |h(t)| max(t, t^{D+1}) stays negligible. If the
// q-expansion stops resolving h first, the walk ends at the last resolved point provided h is
// already below 1e-11 of its peak there.
double find_cutoff(const FourierExpansion& g1, CosetRep gamma, int D, double step, double& scale) {
  double t = 1.0;
  double last_size = std::numeric_limits<double>::infinity();
  int quiet = 0;
  for (int it = 0; it < 200; ++it) {
    double tail = 0.0;
    Complex v = evaluate_slashed(g1, gamma, t, &tail);
    const double weight = std::max(t, std::pow(t, D + 1));
    const double size = std::abs(v) * weight;
    if (tail * weight > 1e-14 * std::max(scale, size)) {
      if (last_size < 1e-11 * scale) return t / step;
      throw AccuracyError("q-expansion too short to resolve the period integrand near a cusp", v, tail);
    }
    scale = std::max(scale, size);
    last_size = size;
    quiet = size < 1e-17 * scale ? quiet + 1 : 0;
    if (quiet >= 3) return t;
    t *= step;
  }
  throw AccuracyError("period integrand does not decay", 0.0, scale);
}

}  // namespace

LambdaProvider lambda_provider(const LSeriesEvaluator& ev) {
  return [&ev](double s) { return ev.lambda(s).value; };
}

PeriodVector period_vector(const FourierExpansion& g1, CosetRep gamma, int degree, const Precision& prec) {
  if (g1.half_integral()) throw DomainError("period integrals need an integral-weight form");
  PeriodVector out;
  out.gamma = gamma;
  out.r.assign(degree + 1, 0.0);
  bool zero = true;
  for (const auto& c : g1.coefficients) zero = zero && c == Complex(0.0);
  if (zero) return out;
  double scale = 0.0;
  const double lo = find_cutoff(g1, gamma, degree, 1.0 / 1.25, scale);
  const double hi = find_cutoff(g1, gamma, degree, 1.25, scale);
  Precision q = prec;
  q.target_abs_tol = std::max(1e-16 * scale, 1e-300);
  for (int n = 0; n <= degree; ++n) {
    auto integrand = [&](double t) { return evaluate_slashed(g1, gamma, t, nullptr) * std::pow(t, n); };
    QuadResult lower = integrate_interval(integrand, lo, 1.0, q);
    QuadResult upper = integrate_interval(integrand, 1.0, hi, q);
    out.r[n] = i_pow(double(n + 1)) * (lower.value + upper.value);
  }
  return out;
}

PeriodVector restrict_parity(const PeriodVector& v, Parity parity) {
  PeriodVector out = v;
  out.parity = parity;
  if (parity == Parity::Full) return out;
  for (std::size_t n = 0; n < out.r.size(); ++n) {
    bool odd = n % 2 == 1;
    if ((parity == Parity::Plus && odd) || (parity == Parity::Minus && !odd)) out.r[n] = 0.0;
  }
  return out;
}

Polynomial rho_polynomial(const PeriodVector& v) {
  const int D = int(v.r.size()) - 1;
  Polynomial out = Polynomial::zero(D);
  for (int n = 0; n <= D; ++n) out[D - n] = (n % 2 ? -1.0 : 1.0) * binom_int(D, n) * v.r[n];
  return out;
}

Polynomial rho_lvalue_polynomial(const FourierExpansion& g1, CosetRep gamma, int degree, const Precision& prec) {
  return rho_polynomial(period_vector(g1, gamma, degree, prec));
}

InducedVector rho_induced(const FourierExpansion& g1, int k_times_two, const Precision& prec) {
  InducedVector v = InducedVector::zero(k_times_two);
  for (CosetRep x : kCosets) v[x] = rho_lvalue_polynomial(g1, x, v.degree(), prec);
  return v;
}

Polynomial es_pairing_w4(const LambdaProvider* g, const LambdaProvider* h, int k_times_two) {
  const double k = k_times_two / 2.0;
  const int D = (k_times_two - 5) / 2;
  Polynomial out = Polynomial::zero(D);
  for (int n = 0; n <= D; ++n) {
    const double s = k - n - 1.5;
    Complex bracket = 0.0;
    if (g) bracket += i_pow(s) * (*g)(s);
    if (h) bracket += i_pow(-s) * std::conj((*h)(s));
    out[n] = -binom_int(D, n) * (n % 2 ? -1.0 : 1.0) * bracket;
  }
  return out;
}

std::vector<Complex> lhs_vector_theorem_coh(const LambdaProvider& lambda_f, const KernelParams& p) {
  p.validate();
  const double k = p.k(), n_level = p.level, a = p.a_value();
  const int D = p.degree();
  std::vector<Complex> out(D + 1);
  for (int n = 0; n <= D; ++n) {
    Complex first = binom_general(k - 2.0, n) * std::pow(n_level, n / 2.0) * lambda_f(a + 1.0 - n);
    Complex second = i_pow(2.0 * n + 0.5 - k) * binom_general(k - 2.0, n + 0.5) *
                     std::pow(n_level, 2.0 * k - a - 1.5 * n - 4.75) * lambda_f(2.0 * k - 3.5 - a - n);
    out[n] = i_pow(a + 1.0) * std::pow(2.0, n) * (first + second);
  }
  return out;
}

std::vector<Complex> lhs_vector_theorem_coh(const LSeriesEvaluator& f, const KernelParams& p) {
  if (f.reflection_level() != p.level) throw DomainError("form level does not match kernel level");
  return lhs_vector_theorem_coh(lambda_provider(f), p);
}

std::vector<Complex> lhs_vector_odd(const LambdaProvider& lambda_f, const KernelParams& p) {
  p.validate();
  const double k = p.k(), n_level = p.level, a = p.a_value();
  const int D = p.degree();
  std::vector<Complex> out(D + 1);
  for (int n = 0; n <= D; ++n) {
    Complex first = binom_general(k - 2.0, n) * std::pow(n_level, n / 2.0) * lambda_f(a + 1.0 - n);
    Complex second = (n % 2 ? 1.0 : -1.0) * binom_general(k - 2.0, n + 0.5) *
                     std::pow(n_level, 2.0 * k - a - 1.5 * n - 4.75) * lambda_f(2.0 * k - 3.5 - a - n);
    out[n] = i_pow(a + 1.0) * (first + second);
  }
  return out;
}

Complex specialized_lhs(const LambdaProvider& lambda_f, int k_times_two, int n) {
  const double k = k_times_two / 2.0;
  const int D = (k_times_two - 5) / 2;
  if (n < 0 || n > D) throw DomainError("index n outside 0..k-5/2");
  double first = std::pow(2.0, 2 * n) / (gamma_real(n + 1.0) * gamma_real(k - 1.0 - n));
  double second = (n % 2 ? 1.0 : -1.0) * std::pow(2.0, 2.0 * k - 5.0 - 2.0 * n) /
                  (gamma_real(D - n + 1.0) * gamma_real(n + 1.5));
  return (first + second) * lambda_f(k - 1.25 - n);
}

Complex specialization_constant(int k_times_two) {
  const double k = k_times_two / 2.0;
  return i_pow(k - 1.25) * gamma_real(k - 1.0);
}

Json lift_solution_to_json(const LiftSolution& s) {
  Json j;
  j["basis_labels"] = s.basis_labels;
  j["g_coords"] = complex_vector_to_json(s.g_coords);
  j["h_coords"] = complex_vector_to_json(s.h_coords);
  j["residual_norm"] = s.residual_norm;
  j["rank"] = s.system_rank;
  j["condition_estimate"] = std::isfinite(s.condition_estimate) ? Json(s.condition_estimate) : Json("inf");
  j["underdetermined"] = s.underdetermined;
  Json rows = Json::array();
  for (const auto& e : s.equations) {
    rows.push_back({{"n", e.n}, {"lhs", complex_to_json(e.lhs)}, {"rhs", complex_to_json(e.rhs)}, {"residual", e.residual}});
  }
  j["equations"] = rows;
  return j;
}

LiftSolution lift_solution_from_json(const Json& j) {
  LiftSolution s;
  try {
    s.basis_labels = j.at("basis_labels").get<std::vector<std::string>>();
    s.g_coords = complex_vector_from_json(j.at("g_coords"));
    s.h_coords = complex_vector_from_json(j.at("h_coords"));
    s.residual_norm = j.at("residual_norm").get<double>();
    s.system_rank = j.at("rank").get<int>();
    const Json& c = j.at("condition_estimate");
    s.condition_estimate = c.is_string() ? std::numeric_limits<double>::infinity() : c.get<double>();
    s.underdetermined = j.at("underdetermined").get<bool>();
    for (const auto& row : j.at("equations")) {
      s.equations.push_back({row.at("n").get<int>(), complex_from_json(row.at("lhs")), complex_from_json(row.at("rhs")),
                             row.at("residual").get<double>()});
    }
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed lift solution: ") + e.what());
  }
  return s;
}

namespace {

Eigen::MatrixXcd pair_matrix(int k_times_two, const std::vector<LSeriesEvaluator>& basis_g,
                             const std::vector<LSeriesEvaluator>& basis_h) {
  const double k = k_times_two / 2.0;
  const int D = (k_times_two - 5) / 2;
  const int cols = int(basis_g.size() + basis_h.size());
  Eigen::MatrixXcd A(D + 1, cols);
  for (int n = 0; n <= D; ++n) {
    const double s = k - n - 1.5;
    const double b = binom_int(D, n);
    int col = 0;
    for (const auto& g : basis_g) A(n, col++) = b * i_pow(n + 0.5 + k) * g.lambda(s).value;
    for (const auto& h : basis_h) A(n, col++) = b * i_pow(-n - 0.5 - k) * std::conj(h.lambda(s).value);
  }
  return A;
}

void check_basis(int k_times_two, const std::vector<LSeriesEvaluator>& basis) {
  for (const auto& b : basis) {
    if (b.form().weight_times_two != k_times_two - 1) throw DomainError("basis form must have weight k - 1/2");
    if (b.reflection_level() != 4) throw DomainError("basis form must have level 4 Fricke data");
    if (b.form().status != FormStatus::Validated) {
      throw DomainError("basis form '" + b.form().label + "' is not validated");
    }
  }
}

}  // namespace

LiftSolution solve_lift_pair(const std::vector<Complex>& lhs, int k_times_two,
                             const std::vector<LSeriesEvaluator>& basis_g, const std::vector<LSeriesEvaluator>& basis_h,
                             double tol, bool strict) {
  const int D = (k_times_two - 5) / 2;
  if (int(lhs.size()) != D + 1) throw DomainError("left-hand side needs k - 3/2 entries");
  check_basis(k_times_two, basis_g);
  check_basis(k_times_two, basis_h);
  Eigen::MatrixXcd A = pair_matrix(k_times_two, basis_g, basis_h);
  Eigen::VectorXcd b(D + 1);
  std::vector<int> ns;
  for (int n = 0; n <= D; ++n) {
    b(n) = lhs[n];
    ns.push_back(n);
  }
  Solved s = least_squares(A, b);
  LiftSolution out = finish(A, b, ns, s);
  for (const auto& g : basis_g) out.basis_labels.push_back("g:" + g.form().label);
  for (const auto& h : basis_h) out.basis_labels.push_back("h:" + h.form().label);
  for (std::size_t j = 0; j < basis_g.size(); ++j) out.g_coords.push_back(s.x(j));
  for (std::size_t j = 0; j < basis_h.size(); ++j) out.h_coords.push_back(std::conj(s.x(basis_g.size() + j)));
  if (strict) require_residual(out, tol, "pair-lift system");
  return out;
}

LiftSolution solve_lift_pair(const LSeriesEvaluator& f, const KernelParams& p,
                             const std::vector<LSeriesEvaluator>& basis_g, const std::vector<LSeriesEvaluator>& basis_h,
                             double tol, bool strict) {
  check_kernel(p);
  if (f.form().weight_times_two != p.k_times_two) throw DomainError("form weight does not match kernel weight");
  return solve_lift_pair(lhs_vector_theorem_coh(f, p), p.k_times_two, basis_g, basis_h, tol, strict);
}

std::vector<Complex> rhs_vector_theorem_coh(int k_times_two, const std::vector<LSeriesEvaluator>& basis_g,
                                            const std::vector<Complex>& g_coords,
                                            const std::vector<LSeriesEvaluator>& basis_h,
                                            const std::vector<Complex>& h_coords) {
  if (g_coords.size() != basis_g.size() || h_coords.size() != basis_h.size()) {
    throw DomainError("coordinate count does not match basis size");
  }
  Eigen::MatrixXcd A = pair_matrix(k_times_two, basis_g, basis_h);
  Eigen::VectorXcd x(A.cols());
  for (std::size_t j = 0; j < g_coords.size(); ++j) x(j) = g_coords[j];
  for (std::size_t j = 0; j < h_coords.size(); ++j) x(g_coords.size() + j) = std::conj(h_coords[j]);
  Eigen::VectorXcd r = A * x;
  return {r.data(), r.data() + r.size()};
}

OddLiftResult solve_lift_odd(const LSeriesEvaluator& f, const KernelParams& p, const std::vector<LSeriesEvaluator>& basis,
                             double tol, double basic_tol, bool strict) {
  check_kernel(p);
  check_basis(p.k_times_two, basis);
  if (basis.empty()) throw DomainError("odd lift needs a non-empty basis");
  if (f.reflection_level() != p.level) throw DomainError("form level does not match kernel level");
  const double k = p.k();
  const int D = p.degree();
  const std::vector<Complex> lhs = lhs_vector_odd(lambda_provider(f), p);
  std::vector<int> ns;
  for (int n = 1; n <= D - 1; n += 2) ns.push_back(n);
  Eigen::MatrixXcd A(ns.size(), basis.size());
  Eigen::VectorXcd b(ns.size());
  for (std::size_t r = 0; r < ns.size(); ++r) {
    const int n = ns[r];
    b(r) = lhs[n];
    for (std::size_t j = 0; j < basis.size(); ++j) {
      A(r, j) = binom_int(D, n) * i_pow(-1.0 - n) * std::pow(2.0, k - 1.5 - n) * basis[j].lambda(k - 1.5 - n).value;
    }
  }
  Solved s = least_squares(A, b);
  OddLiftResult out;
  out.solution = finish(A, b, ns, s);
  for (const auto& g : basis) out.solution.basis_labels.push_back("g:" + g.form().label);
  for (std::size_t j = 0; j < basis.size(); ++j) out.solution.g_coords.push_back(s.x(j));

  out.g1 = scaled(rescale_argument(basis[0].form(), 2), s.x(0));
  for (std::size_t j = 1; j < basis.size(); ++j) {
    out.g1 = linear_combination(out.g1, 1.0, rescale_argument(basis[j].form(), 2), s.x(j));
  }
  out.g1.label = "g1";

  PeriodPolynomial P = period_polynomial_from_lvalues(f, p);
  CocycleOnGenerators c = theta_cocycle(P);
  InducedVector pi_U = induced_pi(c, coset_element(CosetRep::U));
  out.basic.tol = basic_tol;
  for (CosetRep x : {CosetRep::One, CosetRep::T}) {
    Polynomial rho_minus = rho_polynomial(restrict_parity(period_vector(out.g1, x, D), Parity::Minus));
    double dev = (rho_minus - pi_U[x].odd_part()).max_abs();
    (x == CosetRep::One ? out.basic.deviation_one : out.basic.deviation_T) = dev;
  }
  out.basic.pass = out.basic.deviation_one < basic_tol && out.basic.deviation_T < basic_tol;
  if (strict) require_residual(out.solution, tol, "odd-lift system");
  return out;
}

SCoefficients s_coefficients(const LambdaProvider& lambda_f, const KernelParams& p) {
  check_kernel(p);
  const int D = p.degree();
  const double n_level = p.level;
  const double k = p.k();
  const std::vector<Complex> alpha = lval_coefficients(lambda_f, p);
  SCoefficients s;
  s.s_one.assign(D + 1, 0.0);
  s.s_T.assign(D + 1, 0.0);
  for (int n = 0; n <= D; ++n) {
    Complex one = 0.0, tee = 0.0;
    for (int j = 1; j <= n; j += 2) {
      const double w = binom_int(n, j) / binom_int(D, j);
      one += w * alpha[D - j] / std::pow(n_level, k / 2.0 - 1.25 - j / 2.0);
      Complex inner = 0.0;
      for (int l = D - j; l <= D; ++l) {
        inner += (l % 2 ? -1.0 : 1.0) * alpha[l] / std::pow(n_level, l / 2.0) * binom_int(l, D - j);
      }
      tee += w * inner;
    }
    s.s_one[n] = (n % 2 ? -1.0 : 1.0) * one;
    s.s_T[n] = (n % 2 ? 1.0 : -1.0) * tee;
  }
  return s;
}

std::vector<Complex> binomial_transform(const PeriodVector& v) {
  const int D = int(v.r.size()) - 1;
  std::vector<Complex> out(D + 1, 0.0);
  for (int n = 0; n <= D; ++n)
    for (int j = 0; j <= n; ++j) out[n] += binom_int(n, j) * ((n - j) % 2 ? -1.0 : 1.0) * v.r[j];
  return out;
}

FourierExpansion assemble_theorem_expl(const SCoefficients& s, const RPlusTable& r_plus, int k_times_two) {
  const double k = k_times_two / 2.0;
  const int D = (k_times_two - 5) / 2;
  if (int(s.s_one.size()) != D + 1 || int(s.s_T.size()) != D + 1) throw DomainError("s-vectors need k - 3/2 entries");
  auto fetch = [&](CosetRep x, int n) -> const FourierExpansion& {
    auto it = r_plus.find({x, n});
    if (it == r_plus.end()) {
      throw DomainError("unsupported input: missing R^+ expansion for (" + coset_name(x) + ", " + std::to_string(n) + ")");
    }
    return it->second;
  };
  const FourierExpansion& first = fetch(CosetRep::One, 0);
  FourierExpansion out;
  out.weight_times_two = k_times_two - 1;
  out.level = 4;
  out.cusp_width = first.cusp_width;
  out.coefficients.assign(2 * first.truncation(), 0.0);
  out.label = "lift";
  out.source = "assembled";
  const Complex front = (2.0 / 3.0) * std::pow(2.0, 1.5 - k) * i_pow(1.5 - k);
  for (int n = 0; n <= D; ++n) {
    for (auto [x, weight] : {std::pair{CosetRep::U, s.s_one[n]}, std::pair{CosetRep::One, s.s_T[n]}}) {
      const FourierExpansion& R = fetch(x, n);
      if (R.weight_times_two != k_times_two - 1 || R.cusp_width != first.cusp_width) {
        throw DomainError("R^+ expansions must share weight k - 1/2 and width");
      }
      const Complex c = front * binom_int(D, n) * weight;
      // R(2z): coefficient m moves to index 2m.
      for (int m = 1; m <= R.truncation() && 2 * m <= out.truncation(); ++m) out.coefficients[2 * m - 1] += c * R.a(m);
    }
  }
  return out;
}

Complex corollary_constant(int k_times_two, int level, int n, Complex lambda_f) {
  const double k = k_times_two / 2.0;
  const int D = (k_times_two - 5) / 2;
  const double bracket = binom_general(k - 2.0, n) * std::pow(level, n / 2.0) +
                         (n % 2 ? 1.0 : -1.0) * binom_general(k - 2.0, n + 0.5) * std::pow(level, k - 2.5 - 1.5 * n);
  return binom_int(D, n) * std::pow(2.0, -n) * (i_pow(1.75 + n) + lambda_f * i_pow(-n - 0.25)) / bracket;
}

CorollaryReport corollary_ratio(const LambdaProvider& lambda_f, const LambdaProvider& lambda_g, int k_times_two, int level,
                                double tol) {
  const double k = k_times_two / 2.0;
  const int D = (k_times_two - 5) / 2;
  CorollaryReport report;
  report.tol = tol;
  // Rows compare 2^n B_n Lambda_f against binom(D, n)(i^{7/4+n} + lambda i^{-n-1/4}) Lambda_g, where
  // B_n is the bracket in C_{k,N,n}; B_n may vanish, so it is not divided out.
  std::vector<double> bracket(D + 1);
  std::vector<Complex> lf(D + 1), lg(D + 1);
  double best = 0.0;
  for (int n = 0; n <= D; ++n) {
    bracket[n] = binom_general(k - 2.0, n) * std::pow(level, n / 2.0) +
                 (n % 2 ? 1.0 : -1.0) * binom_general(k - 2.0, n + 0.5) * std::pow(level, k - 2.5 - 1.5 * n);
    lf[n] = lambda_f(k - 1.25 - n);
    lg[n] = lambda_g(k - 1.5 - n);
    double weight = binom_int(D, n) * std::abs(lg[n]);
    if (weight > best) {
      best = weight;
      report.extraction_n = n;
    }
  }
  if (best < 1e-12) throw DomainError("indeterminate lambda_f: all reference L-values of g vanish");
  const int m = report.extraction_n;
  const Complex target = std::pow(2.0, m) * bracket[m] * lf[m] / (binom_int(D, m) * lg[m]);
  report.lambda_f = (target - i_pow(1.75 + m)) * i_pow(m + 0.25);
  for (int n = 0; n <= D; ++n) {
    CorollaryRow row;
    row.n = n;
    row.lhs = std::pow(2.0, n) * bracket[n] * lf[n];
    row.rhs = binom_int(D, n) * (i_pow(1.75 + n) + report.lambda_f * i_pow(-n - 0.25)) * lg[n];
    row.residual = std::abs(row.lhs - row.rhs);
    report.max_residual = std::max(report.max_residual, row.residual);
    report.rows.push_back(row);
  }
  report.pass = report.max_residual < tol;
  return report;
}

}  // namespace halfint
