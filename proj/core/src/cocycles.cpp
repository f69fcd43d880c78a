#include "halfint/cocycles.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "halfint/errors.hpp"

namespace halfint {

namespace {

Polynomial slash_generator(const CocycleOnGenerators& c, const Polynomial& p, Generator gen, bool inverse) {
  GroupElement x = generator_element(gen);
  if (inverse) x = x.inverse();
  Polynomial out = slash_polynomial(p, x, -c.degree());
  if (c.group == GroupTag::Gamma04Star && !c.chi.is_trivial()) {
    Complex v = c.chi.generator_value(gen);
    out *= std::conj(inverse ? 1.0 / v : v);
  }
  return out;
}

Polynomial fold(const CocycleOnGenerators& c, const std::vector<Letter>& letters) {
  const int D = c.degree();
  Polynomial acc = Polynomial::zero(D);
  for (const auto& l : letters) {
    const Polynomial sigma = c.value(l.gen);
    const bool inverse = l.exponent < 0;
    // sigma(x^{-1}) = -sigma(x)|x^{-1}
    const Polynomial step = inverse ? -slash_generator(c, sigma, l.gen, true) : sigma;
    for (long e = 0; e < std::labs(l.exponent); ++e) acc = slash_generator(c, acc, l.gen, inverse) + step;
  }
  return acc;
}

Word decompose_for(GroupTag tag, const GroupElement& g) {
  switch (tag) {
    case GroupTag::Gamma04Star: return decompose_gamma04star(g);
    case GroupTag::H2: return decompose_theta(g);
    case GroupTag::PSL2Z: return decompose_psl2z(g);
  }
  throw std::logic_error("unknown group");
}

Polynomial negate_argument(const Polynomial& p) { return p.substitute_affine(-1.0, 0.0); }

}  // namespace

Polynomial hat_p(const PeriodPolynomial& P) {
  return P.coefficients.substitute_affine(2.0 / std::sqrt(double(P.params.level)), 0.0);
}

Polynomial CocycleOnGenerators::value(Generator gen) const {
  if (auto it = values.find(gen); it != values.end()) return it->second;
  if (group == GroupTag::Gamma04Star && gen == Generator::V) {
    return fold(*this, {{Generator::W, 1}, {Generator::T, -1}, {Generator::W, -1}});
  }
  if (gen == Generator::NegOne) return Polynomial::zero(degree());
  throw DomainError("cocycle has no value for generator " + generator_name(gen));
}

CocycleOnGenerators gamma04_cocycle(const PeriodPolynomial& P, const Character& chi) {
  if (P.params.level % 4 != 0) throw DomainError("cocycle needs a level divisible by 4");
  CocycleOnGenerators c;
  c.group = GroupTag::Gamma04Star;
  c.k_times_two = P.params.k_times_two;
  c.chi = chi;
  const int D = P.params.degree();
  c.values = {{Generator::W, hat_p(P)}, {Generator::T, Polynomial::zero(D)}, {Generator::NegOne, Polynomial::zero(D)}};
  return c;
}

CocycleOnGenerators theta_cocycle(const PeriodPolynomial& P) {
  if (P.params.degree() % 2 != 0) throw DomainError("theta-group cocycle needs an even k - 5/2");
  CocycleOnGenerators c;
  c.group = GroupTag::H2;
  c.k_times_two = P.params.k_times_two;
  const int D = P.params.degree();
  c.values = {{Generator::S, hat_p(P).substitute_affine(0.5, 0.0)},
              {Generator::T2, Polynomial::zero(D)},
              {Generator::NegOne, Polynomial::zero(D)}};
  return c;
}

Polynomial cocycle_eval(const CocycleOnGenerators& c, const GroupElement& gamma) {
  return fold(c, decompose_for(c.group, gamma).letters);
}

double relation_defect(const CocycleOnGenerators& c) {
  Generator gen = c.group == GroupTag::Gamma04Star ? Generator::W : Generator::S;
  return fold(c, {{gen, 2}}).norm();
}

InducedVector InducedVector::zero(int k_times_two) {
  InducedVector v;
  v.k_times_two = k_times_two;
  for (auto& p : v.polys) p = Polynomial::zero(v.degree());
  return v;
}

InducedVector& InducedVector::operator+=(const InducedVector& o) {
  for (std::size_t j = 0; j < 3; ++j) polys[j] += o.polys[j];
  return *this;
}

InducedVector& InducedVector::operator-=(const InducedVector& o) {
  for (std::size_t j = 0; j < 3; ++j) polys[j] -= o.polys[j];
  return *this;
}

InducedVector& InducedVector::operator*=(Complex s) {
  for (auto& p : polys) p *= s;
  return *this;
}

double InducedVector::norm() const {
  double sum = 0.0;
  for (const auto& p : polys) sum += p.norm() * p.norm();
  return std::sqrt(sum);
}

Json induced_to_json(const InducedVector& v) {
  Json j = Json::object();
  for (CosetRep x : kCosets) j[coset_name(x)] = complex_vector_to_json(v[x].coefficients());
  return j;
}

InducedVector induced_from_json(const Json& j, int k_times_two) {
  InducedVector v = InducedVector::zero(k_times_two);
  for (CosetRep x : kCosets) {
    if (!j.contains(coset_name(x))) throw DomainError("induced vector lacks coset " + coset_name(x));
    Polynomial p(complex_vector_from_json(j.at(coset_name(x))));
    if (p.degree_bound() > v.degree()) throw DomainError("induced vector entry exceeds degree k - 5/2");
    std::vector<Complex> c = p.coefficients();
    c.resize(v.degree() + 1);
    v[x] = Polynomial(std::move(c));
  }
  return v;
}

InducedVector induced_pi(const CocycleOnGenerators& c, const GroupElement& g) {
  if (c.group != GroupTag::H2) throw DomainError("induced cocycle needs a theta-group cocycle");
  InducedVector v = InducedVector::zero(c.k_times_two);
  const GroupElement g_inv = g.inverse();
  for (CosetRep x : kCosets) {
    GroupElement k_inv = kappa(x, g_inv).inverse();
    v[x] = slash_polynomial(cocycle_eval(c, k_inv), coset_element(x), -c.degree());
  }
  return v;
}

InducedVector double_bar_action(const InducedVector& v, const GroupElement& g) {
  InducedVector out = InducedVector::zero(v.k_times_two);
  const GroupElement g_inv = g.inverse();
  for (CosetRep x : kCosets) {
    CosetRep src = coset_u(coset_element(x) * g_inv);
    out[x] = slash_polynomial(v[src], g, -v.degree());
  }
  return out;
}

InducedVector epsilon_action(const InducedVector& v) {
  InducedVector out = InducedVector::zero(v.k_times_two);
  for (CosetRep x : kCosets) {
    GroupElement e = coset_element(x);
    GroupElement conj{{e.m.a, -e.m.b, -e.m.c, e.m.d}, 0};
    // |eps with eps = diag(-1, 1): (0 z + 1)^D P(-z)
    out[x] = negate_argument(v[coset_u(conj)]);
  }
  return out;
}

InducedVector plus_part(const InducedVector& v) { return 0.5 * (v + epsilon_action(v)); }

InducedVector minus_part(const InducedVector& v) { return 0.5 * (v - epsilon_action(v)); }

WMembershipReport check_w_membership(const InducedVector& v, double tol) {
  const GroupElement S = generator_element(Generator::S);
  const GroupElement U = coset_element(CosetRep::U);
  WMembershipReport r;
  r.tol = tol;
  r.s_residual = (double_bar_action(v, S) + v).norm();
  r.u_residual = (double_bar_action(v, U * U) + double_bar_action(v, U) + v).norm();
  r.pass = r.s_residual < tol && r.u_residual < tol;
  return r;
}

CoboundaryCorrection remove_translation_part(const CocycleOnGenerators& c) {
  const GroupElement T = generator_element(Generator::T);
  const GroupElement U = coset_element(CosetRep::U);
  const int n = c.degree() + 1;
  const int dim = 3 * n;
  auto flatten = [&](const InducedVector& v) {
    Eigen::VectorXcd out(dim);
    for (int x = 0; x < 3; ++x)
      for (int j = 0; j < n; ++j) out(x * n + j) = v.polys[x][j];
    return out;
  };
  Eigen::MatrixXcd A(dim, dim);
  for (int col = 0; col < dim; ++col) {
    InducedVector e = InducedVector::zero(c.k_times_two);
    e.polys[col / n][col % n] = 1.0;
    A.col(col) = flatten(double_bar_action(e, T) - e);
  }
  const InducedVector pi_T = induced_pi(c, T);
  Eigen::VectorXcd q = A.completeOrthogonalDecomposition().solve(flatten(pi_T));
  CoboundaryCorrection out;
  out.Q = InducedVector::zero(c.k_times_two);
  for (int x = 0; x < 3; ++x)
    for (int j = 0; j < n; ++j) out.Q.polys[x][j] = q(x * n + j);
  out.fit_residual = (double_bar_action(out.Q, T) - out.Q - pi_T).norm();
  out.corrected_U = induced_pi(c, U) - (double_bar_action(out.Q, U) - out.Q);
  return out;
}

InducedVector check_c_membership_form(const InducedVector& P, double invariance_tol) {
  const GroupElement T = generator_element(Generator::T);
  double defect = (double_bar_action(P, T) - P).norm();
  if (defect > invariance_tol) {
    throw DomainError("C-membership form needs P||T = P; defect " + std::to_string(defect));
  }
  return P - double_bar_action(P, generator_element(Generator::S));
}

}  // namespace halfint
