#include "checks.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "halfint/bundled_forms.hpp"
#include "halfint/cocycles.hpp"
#include "halfint/errors.hpp"
#include "halfint/kr_comparison.hpp"
#include "halfint/l_series.hpp"
#include "halfint/lift_solver.hpp"
#include "halfint/period_polynomials.hpp"

namespace halfint::cli {

namespace {

const std::map<std::string, double> kDefaultTolerances = {
    {"fe", 1e-8},          {"eich", 1e-6},   {"peri", 1e-8},       {"transf", 1e-10},
    {"brug", 10.0},        {"cocycle", 1e-8}, {"indep", 1e-10},    {"w-membership", 1e-8},
    {"kreich", 1e-5},      {"kr-integral", 1e-4}, {"lift", 1e-6},  {"basic", 1e-6},
    {"synthesis", 1e-8},   {"s-consistency", 1e-6}};

KernelParams kernel(const RunConfig& c, int k_times_two) {
  KernelParams p;
  p.k_times_two = k_times_two;
  p.a = parse_rational(c.a);
  p.validate();
  return p;
}

std::vector<LSeriesEvaluator> basis_evaluators(const RunConfig& c) {
  std::vector<LSeriesEvaluator> out;
  for (const auto& b : c.basis) out.emplace_back(load_form(b, c.truncation), c.precision);
  return out;
}

std::vector<Complex> kr_samples() { return {{0.0, 0.5}, {1.0 / 3.0, 1.0}, {0.0, 2.0}}; }

}  // namespace

double RunConfig::tol(const std::string& check) const {
  if (auto it = tolerances.find(check); it != tolerances.end()) return it->second;
  return kDefaultTolerances.at(check);
}

void RunConfig::validate() const {
  precision.validate();
  if (truncation < 50) throw DomainError("truncation must be at least 50");
  if (samples < 1) throw DomainError("samples must be positive");
  for (const auto& [name, v] : tolerances) {
    if (!(v > 0.0)) throw DomainError("tolerance '" + name + "' must be positive");
  }
}

RunConfig config_from_json(const Json& j, RunConfig c) {
  try {
    if (j.contains("precision")) {
      const Json& p = j.at("precision");
      c.precision.target_abs_tol = p.value("abs_tol", c.precision.target_abs_tol);
      c.precision.target_rel_tol = p.value("rel_tol", c.precision.target_rel_tol);
      c.precision.max_terms = p.value("max_terms", c.precision.max_terms);
      c.precision.max_quad_depth = p.value("max_quad_depth", c.precision.max_quad_depth);
    }
    c.truncation = j.value("truncation", c.truncation);
    c.samples = j.value("samples", c.samples);
    c.seed = j.value("seed", c.seed);
    c.out_dir = j.value("out", c.out_dir);
    c.form = j.value("form", c.form);
    c.basis = j.value("basis", c.basis);
    c.a = j.value("a", c.a);
    c.expensive = j.value("expensive", c.expensive);
    if (j.contains("tolerances")) {
      for (const auto& [k, v] : j.at("tolerances").items()) c.tolerances[k] = v.get<double>();
    }
  } catch (const Json::exception& e) {
    throw DomainError(std::string("invalid config: ") + e.what());
  }
  return c;
}

Json config_to_json(const RunConfig& c) {
  Json tol = Json::object();
  for (const auto& [k, v] : kDefaultTolerances) tol[k] = c.tol(k);
  return {{"precision",
           {{"abs_tol", c.precision.target_abs_tol},
            {"rel_tol", c.precision.target_rel_tol},
            {"max_terms", c.precision.max_terms},
            {"max_quad_depth", c.precision.max_quad_depth}}},
          {"truncation", c.truncation},
          {"samples", c.samples},
          {"seed", c.seed},
          {"out", c.out_dir},
          {"form", c.form},
          {"basis", c.basis},
          {"a", c.a},
          {"expensive", c.expensive},
          {"tolerances", tol}};
}

FourierExpansion load_form(const std::string& source, int truncation) {
  const auto names = bundled_names();
  if (std::find(names.begin(), names.end(), source) != names.end()) return bundled_form(source, truncation);
  FourierExpansion f = read_form_file(source);
  if (f.status != FormStatus::Validated) {
    throw UnvalidatedFormError("form '" + source + "' is " + status_name(f.status) +
                               "; run `halfint forms validate " + source + "` first");
  }
  return f;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt(Complex z) { return fmt(z.real()) + (z.imag() < 0 ? "" : "+") + fmt(z.imag()) + "i"; }

CheckResult check_fe(const RunConfig& c) {
  CheckResult r{"fe", true, Json::object(), {{"form", "s", "lhs", "rhs", "rel_residual"}}};
  std::vector<std::string> forms = {c.form};
  forms.insert(forms.end(), c.basis.begin(), c.basis.end());
  for (const auto& name : forms) {
    LSeriesEvaluator ev(load_form(name, c.truncation), c.precision);
    const double k = ev.weight();
    std::vector<Complex> grid = {1.0, 2.0, Complex(k / 2.0 + 0.25), Complex(k - 2.0), Complex(1.0, 2.0)};
    FunctionalEquationReport fe = verify_functional_equation(ev, grid, c.tol("fe"));
    for (const auto& row : fe.rows) {
      r.table.push_back({name, fmt(row.s), fmt(row.lhs), fmt(row.rhs), fmt(row.rel_residual)});
    }
    r.detail[name] = {{"max_rel_residual", fe.max_rel_residual}, {"pass", fe.pass}};
    r.pass = r.pass && fe.pass;
  }
  r.detail["tol"] = c.tol("fe");
  return r;
}

CheckResult check_eich(const RunConfig& c) {
  const FourierExpansion f = load_form(c.form, c.truncation);
  LSeriesEvaluator ev(f, c.precision);
  const KernelParams p = kernel(c, f.weight_times_two);
  const PeriodPolynomial P = period_polynomial_from_lvalues(ev, p);
  EichReport e = verify_theorem_eich_i(f, P, sample_points(c.samples, 0.6, 1.6), Character::for_weight(f.weight_times_two),
                                       c.tol("eich"), c.tol("peri"));
  CheckResult r{"eich", e.pass, Json::object(), {{"z", "F", "F_slash_W", "P", "residual"}}};
  for (const auto& row : e.rows) r.table.push_back({fmt(row.z), fmt(row.F), fmt(row.F_slash_W), fmt(row.P), fmt(row.residual)});
  r.detail = {{"a", c.a},
              {"max_residual", e.max_residual},
              {"peri_norm", e.peri_norm},
              {"peri_relative", e.peri_relative},
              {"tol", c.tol("eich")},
              {"peri_tol", c.tol("peri")},
              {"period_polynomial", period_polynomial_to_json(P)}};
  return r;
}

CheckResult check_transf(const RunConfig& c) {
  CheckResult r{"transf", true, Json::object(), {{"a", "samples", "max_rel_error"}}};
  const FourierExpansion f = load_form(c.form, c.truncation);
  for (const std::string a : {c.a, std::string("9/2"), std::string("17/4")}) {
    RunConfig cc = c;
    cc.a = a;
    TransfReport t = verify_kernel_symmetry(kernel(cc, f.weight_times_two), 100, c.tol("transf"), c.seed);
    r.table.push_back({a, std::to_string(t.samples), fmt(t.max_rel_error)});
    r.detail[a] = t.max_rel_error;
    r.pass = r.pass && t.pass;
  }
  r.detail["seed"] = c.seed;
  r.detail["tol"] = c.tol("transf");
  return r;
}

CheckResult check_brug(const RunConfig& c) {
  LSeriesEvaluator ev(load_form(c.form, c.truncation), c.precision);
  BrugReport b = verify_prop_brug(ev, {2.0, 4.0, 8.0, 16.0}, c.tol("brug"));
  CheckResult r{"brug", b.pass, Json::object(), {{"x", "lhs", "rhs", "remainder", "ratio"}}};
  for (const auto& row : b.rows) r.table.push_back({fmt(row.x), fmt(row.lhs), fmt(row.rhs), fmt(row.remainder), fmt(row.ratio)});
  r.detail = {{"max_ratio_over_first", b.max_ratio_over_first}, {"tol_factor", b.tol_factor}};
  return r;
}

CheckResult check_cocycle(const RunConfig& c) {
  const FourierExpansion f = load_form(c.form, c.truncation);
  LSeriesEvaluator ev(f, c.precision);
  const PeriodPolynomial P = period_polynomial_from_lvalues(ev, kernel(c, f.weight_times_two));
  const CocycleOnGenerators c4 = gamma04_cocycle(P, Character::for_weight(f.weight_times_two));
  const CocycleOnGenerators th = theta_cocycle(P);

  const double w2 = relation_defect(c4), s2 = relation_defect(th);
  const InducedVector v = induced_pi(th, coset_element(CosetRep::U));
  const double i1 = (v[CosetRep::One] - P.coefficients.substitute_affine(0.5, 0.0)).norm();
  const double iT = (v[CosetRep::T] - P.coefficients.substitute_affine(0.5, -0.5)).norm();
  const double iU = v[CosetRep::U].norm();

  std::mt19937_64 rng(c.seed);
  double ident = 0.0, inverse = 0.0;
  for (int j = 0; j < 100; ++j) {
    const GroupElement g = random_element(GroupTag::PSL2Z, 6, rng), h = random_element(GroupTag::PSL2Z, 6, rng);
    const InducedVector lhs = induced_pi(th, g * h);
    const InducedVector rhs = double_bar_action(induced_pi(th, g), h) + induced_pi(th, h);
    ident = std::max(ident, (lhs - rhs).norm() / std::max(1.0, lhs.norm()));
  }
  for (int j = 0; j < 20; ++j) {
    const GroupElement g = random_element(GroupTag::Gamma04Star, 6, rng);
    const Polynomial value = cocycle_eval(c4, g);
    const Polynomial sum = slash_polynomial(value, g.inverse(), -P.params.degree()) + cocycle_eval(c4, g.inverse());
    inverse = std::max(inverse, sum.norm() / std::max(1.0, value.norm()));
  }
  const double tol = c.tol("cocycle"), itol = c.tol("indep");
  CheckResult r{"cocycle", false, Json::object(), {{"quantity", "value", "tol"}}};
  r.table = {{"quantity", "value", "tol"},
             {"W4^2 defect", fmt(w2), fmt(tol)},
             {"S^2 defect", fmt(s2), fmt(tol)},
             {"pi(U)(1) - P(z/2)", fmt(i1), fmt(itol)},
             {"pi(U)(T) - P((z-1)/2)", fmt(iT), fmt(itol)},
             {"pi(U)(U)", fmt(iU), fmt(itol)},
             {"cocycle identity (relative)", fmt(ident), fmt(tol)},
             {"inverse identity (relative)", fmt(inverse), fmt(tol)}};
  r.pass = w2 < tol && s2 < tol && i1 < itol && iT < itol && iU < itol && ident < tol && inverse < tol;
  r.detail = {{"w4_squared_defect", w2}, {"s_squared_defect", s2}, {"indep", {i1, iT, iU}},
              {"cocycle_identity_rel", ident}, {"inverse_identity_rel", inverse}, {"seed", c.seed},
              {"pi_U", induced_to_json(v)}};
  return r;
}

CheckResult check_w_membership(const RunConfig& c) {
  const FourierExpansion f = load_form(c.form, c.truncation);
  LSeriesEvaluator ev(f, c.precision);
  const PeriodPolynomial P = period_polynomial_from_lvalues(ev, kernel(c, f.weight_times_two));
  const CocycleOnGenerators th = theta_cocycle(P);
  const InducedVector v = induced_pi(th, coset_element(CosetRep::U));
  const double tol = c.tol("w-membership");
  const WMembershipReport full = halfint::check_w_membership(v, tol);
  const WMembershipReport plus = halfint::check_w_membership(plus_part(v), tol);
  const WMembershipReport minus = halfint::check_w_membership(minus_part(v), tol);
  const CoboundaryCorrection corr = remove_translation_part(th);
  const WMembershipReport corrected = halfint::check_w_membership(corr.corrected_U, tol);
  CheckResult r{"w-membership", full.pass, Json::object(), {{"vector", "s_residual", "u_residual", "pass"}}};
  auto row = [&](const std::string& name, const WMembershipReport& w) {
    r.table.push_back({name, fmt(w.s_residual), fmt(w.u_residual), w.pass ? "1" : "0"});
    r.detail[name] = {{"s_residual", w.s_residual}, {"u_residual", w.u_residual}, {"pass", w.pass}};
  };
  row("pi(U)", full);
  row("pi(U)+", plus);
  row("pi(U)-", minus);
  row("pi(U) after removing the T-part", corrected);
  r.detail["translation_fit_residual"] = corr.fit_residual;
  r.detail["pi_T_norm"] = induced_pi(th, generator_element(Generator::T)).norm();
  r.detail["tol"] = tol;
  return r;
}

CheckResult check_kreich(const RunConfig& c) {
  LSeriesEvaluator ev(load_form(c.form, c.truncation), c.precision);
  KREvaluator kr(ev, c.truncation);
  KReichReport rep = verify_kreich(kr, kr_samples(), c.tol("kreich"));
  KReichReport printed = verify_kreich(kr, kr_samples(), c.tol("kreich"), KRSign::AsPrinted);
  CheckResult r{"kreich", rep.pass, Json::object(), {{"z", "lhs", "rhs", "rel_residual", "rhs_as_printed", "rel_residual_as_printed"}}};
  for (std::size_t j = 0; j < rep.rows.size(); ++j) {
    const auto& a = rep.rows[j];
    const auto& b = printed.rows[j];
    r.table.push_back({fmt(a.z), fmt(a.lhs), fmt(a.rhs), fmt(a.rel_residual), fmt(b.rhs), fmt(b.rel_residual)});
  }
  r.detail["identity"] = kreich_report_to_json(rep);
  r.detail["identity_as_printed"] = kreich_report_to_json(printed);
  if (c.expensive) {
    KRIntegralReport ir = kr_integral_representation(kr, {0.0, 1.0}, c.tol("kr-integral"));
    KRIntegralReport ir_printed = kr_integral_representation(kr, {0.0, 1.0}, c.tol("kr-integral"), KRRootForm::AsPrinted);
    r.detail["integral_representation"] = kr_integral_report_to_json(ir);
    r.detail["integral_representation_as_printed"] = kr_integral_report_to_json(ir_printed);
    r.pass = r.pass && ir.pass;
  }
  return r;
}

const std::vector<std::string>& verify_names() {
  static const std::vector<std::string> names = {"fe", "eich", "transf", "brug", "cocycle", "w-membership", "kreich"};
  return names;
}

CheckResult run_check(const std::string& name, const RunConfig& c) {
  if (name == "fe") return check_fe(c);
  if (name == "eich") return check_eich(c);
  if (name == "transf") return check_transf(c);
  if (name == "brug") return check_brug(c);
  if (name == "cocycle") return check_cocycle(c);
  if (name == "w-membership") return check_w_membership(c);
  if (name == "kreich") return check_kreich(c);
  throw DomainError("unknown check '" + name + "'");
}

CheckResult lvalue_table(const RunConfig& c, const std::vector<double>& s_list) {
  LSeriesEvaluator ev(load_form(c.form, c.truncation), c.precision);
  const double k = ev.weight();
  const double N = ev.reflection_level();
  CheckResult r{"lvalue", true, {{"rows", Json::array()}}, {{"s", "lambda", "err_bound", "fe_rhs", "fe_residual"}}};
  for (double s : s_list) {
    LValue l = ev.lambda(s);
    LValue m = ev.lambda(k - s);
    const Complex rhs = ev.fricke_eigenvalue() * std::pow(N, k / 2.0 - s) * m.value;
    const double resid = std::abs(l.value - rhs);
    const double bound = l.abs_err_bound + std::abs(ev.fricke_eigenvalue()) * std::pow(N, k / 2.0 - s) * m.abs_err_bound;
    r.table.push_back({fmt(s), fmt(l.value), fmt(l.abs_err_bound), fmt(rhs), fmt(resid)});
    r.detail["rows"].push_back({{"s", s}, {"lambda", complex_to_json(l.value)}, {"err_bound", l.abs_err_bound},
                        {"fe_rhs", complex_to_json(rhs)}, {"fe_residual", resid}, {"fe_bound", bound}});
  }
  return r;
}

CheckResult period_report(const RunConfig& c) {
  const FourierExpansion f = load_form(c.form, c.truncation);
  LSeriesEvaluator ev(f, c.precision);
  const PeriodPolynomial P = period_polynomial_from_lvalues(ev, kernel(c, f.weight_times_two));
  CheckResult r{"period", true, period_polynomial_to_json(P), {{"n", "coefficient"}}};
  for (int n = 0; n <= P.params.degree(); ++n) r.table.push_back({std::to_string(n), fmt(P.coefficients[n])});
  return r;
}

CheckResult lift_pair_report(const RunConfig& c) {
  const FourierExpansion f = load_form(c.form, c.truncation);
  LSeriesEvaluator ev(f, c.precision);
  const KernelParams p = kernel(c, f.weight_times_two);
  const std::vector<LSeriesEvaluator> basis = basis_evaluators(c);
  const LiftSolution s = solve_lift_pair(ev, p, basis, basis, c.tol("lift"), false);

  // recovery of known coordinates from synthesized right-hand sides
  std::vector<Complex> cg, ch;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    cg.emplace_back(0.3 + 0.1 * j, -0.2);
    ch.emplace_back(-1.1, 0.4 - 0.1 * j);
  }
  const LiftSolution back = solve_lift_pair(rhs_vector_theorem_coh(p.k_times_two, basis, cg, basis, ch), p.k_times_two,
                                            basis, basis, c.tol("lift"), false);
  double recovery = 0.0;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    recovery = std::max({recovery, std::abs(back.g_coords[j] - cg[j]), std::abs(back.h_coords[j] - ch[j])});
  }
  CheckResult r{"lift-pair", false, Json::object(), {{"n", "lhs", "rhs", "residual"}}};
  for (const auto& e : s.equations) r.table.push_back({std::to_string(e.n), fmt(e.lhs), fmt(e.rhs), fmt(e.residual)});
  r.detail = lift_solution_to_json(s);
  r.detail["a"] = c.a;
  r.detail["tol"] = c.tol("lift");
  r.detail["synthesis_recovery_error"] = recovery;
  r.pass = s.residual_norm < c.tol("lift") && recovery < c.tol("synthesis");
  return r;
}

CheckResult lift_odd_report(const RunConfig& c) {
  const FourierExpansion f = load_form(c.form, c.truncation);
  LSeriesEvaluator ev(f, c.precision);
  const KernelParams p = kernel(c, f.weight_times_two);
  const OddLiftResult o = solve_lift_odd(ev, p, basis_evaluators(c), c.tol("lift"), c.tol("basic"), false);

  const SCoefficients sc = s_coefficients(lambda_provider(ev), p);
  const int D = p.degree();
  const auto t1 = binomial_transform(restrict_parity(period_vector(o.g1, CosetRep::One, D, c.precision), Parity::Minus));
  const auto tT = binomial_transform(restrict_parity(period_vector(o.g1, CosetRep::T, D, c.precision), Parity::Minus));
  double consistency = 0.0;
  for (int n = 0; n <= D; ++n) {
    consistency = std::max({consistency, std::abs(sc.s_one[n] - t1[n]), std::abs(sc.s_T[n] - tT[n])});
  }
  CheckResult r{"lift-odd", false, Json::object(), {{"n", "lhs", "rhs", "residual"}}};
  for (const auto& e : o.solution.equations) r.table.push_back({std::to_string(e.n), fmt(e.lhs), fmt(e.rhs), fmt(e.residual)});
  r.detail = lift_solution_to_json(o.solution);
  r.detail["a"] = c.a;
  r.detail["tol"] = c.tol("lift");
  r.detail["basic"] = {{"deviation_one", o.basic.deviation_one}, {"deviation_T", o.basic.deviation_T},
                       {"tol", o.basic.tol}, {"pass", o.basic.pass}};
  r.detail["s_consistency"] = consistency;
  r.detail["s_one"] = complex_vector_to_json(sc.s_one);
  r.detail["s_T"] = complex_vector_to_json(sc.s_T);
  r.detail["g1"] = form_to_json(o.g1);
  r.pass = o.solution.residual_norm < c.tol("lift") && o.basic.pass && consistency < c.tol("s-consistency");
  return r;
}

void write_csv(const std::string& path, const CsvTable& t) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  for (const auto& row : t) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      const bool quote = row[j].find(',') != std::string::npos;
      out << (j ? "," : "") << (quote ? "\"" + row[j] + "\"" : row[j]);
    }
    out << '\n';
  }
}

void write_artifacts(const RunConfig& c, const std::string& stem, const CheckResult& r) {
  std::filesystem::create_directories(c.out_dir);
  const std::filesystem::path base = std::filesystem::path(c.out_dir) / stem;
  Json j = {{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}};
  write_json_file(base.string() + ".json", j);
  if (r.table.size() > 1) write_csv(base.string() + ".csv", r.table);
}

}  // namespace halfint::cli
