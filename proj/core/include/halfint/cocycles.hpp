#pragma once

#include <array>
#include <map>

#include "halfint/form_io.hpp"
#include "halfint/group_words.hpp"
#include "halfint/period_polynomials.hpp"
#include "halfint/polynomial.hpp"

namespace halfint {

// P_a(2z / sqrt(N)).
Polynomial hat_p(const PeriodPolynomial& P);

// A 1-cocycle given by its values on free generators; the action is |_{5/2-k, chi}.
struct CocycleOnGenerators {
  GroupTag group = GroupTag::Gamma04Star;
  int k_times_two = 13;
  std::map<Generator, Polynomial> values;
  Character chi = Character::trivial();

  int degree() const { return (k_times_two - 5) / 2; }
  Polynomial value(Generator gen) const;
};

// W_4 -> P^_a, T -> 0, -1 -> 0 on Gamma_0(4)^*.
CocycleOnGenerators gamma04_cocycle(const PeriodPolynomial& P, const Character& chi);
// S -> P^_a(z/2), T^2 -> 0 on H(2).
CocycleOnGenerators theta_cocycle(const PeriodPolynomial& P);

// sigma(g1 g2) = sigma(g1)|g2 + sigma(g2) folded over the word of gamma.
Polynomial cocycle_eval(const CocycleOnGenerators& c, const GroupElement& gamma);

// Coefficient norm of the value on the defining relation (W_4^2 or S^2).
double relation_defect(const CocycleOnGenerators& c);

struct InducedVector {
  int k_times_two = 13;
  std::array<Polynomial, 3> polys;

  int degree() const { return (k_times_two - 5) / 2; }
  static InducedVector zero(int k_times_two);
  Polynomial& operator[](CosetRep x) { return polys[std::size_t(x)]; }
  const Polynomial& operator[](CosetRep x) const { return polys[std::size_t(x)]; }

  InducedVector& operator+=(const InducedVector& o);
  InducedVector& operator-=(const InducedVector& o);
  InducedVector& operator*=(Complex s);
  friend InducedVector operator+(InducedVector a, const InducedVector& b) { return a += b; }
  friend InducedVector operator-(InducedVector a, const InducedVector& b) { return a -= b; }
  friend InducedVector operator*(Complex s, InducedVector v) { return v *= s; }

  // Euclidean norm over all coefficients of all three entries.
  double norm() const;
};

Json induced_to_json(const InducedVector& v);
InducedVector induced_from_json(const Json& j, int k_times_two);

// pi_f(g)(x) = pi'_f(kappa_{x, g^{-1}}^{-1}) | u(x) for an H(2) cocycle pi'_f.
InducedVector induced_pi(const CocycleOnGenerators& c, const GroupElement& g);

// (v||g)(x) = v(u(x g^{-1})) | g.
InducedVector double_bar_action(const InducedVector& v, const GroupElement& g);

// (v||eps)(x) = v(u(eps x eps)) | eps with eps = diag(-1, 1).
InducedVector epsilon_action(const InducedVector& v);
InducedVector plus_part(const InducedVector& v);
InducedVector minus_part(const InducedVector& v);

struct WMembershipReport {
  double s_residual = 0.0;  // norm of v||(S+1)
  double u_residual = 0.0;  // norm of v||(U^2+U+1)
  double tol = 0.0;
  bool pass = false;
};

WMembershipReport check_w_membership(const InducedVector& v, double tol);

// Least-squares Q with Q||(T - 1) = pi_f(T); subtracting the coboundary of Q gives a cocycle
// vanishing on T, whose value at U is returned in corrected_U.
struct CoboundaryCorrection {
  InducedVector Q;
  double fit_residual = 0.0;  // norm of Q||(T - 1) - pi_f(T)
  InducedVector corrected_U;
};

CoboundaryCorrection remove_translation_part(const CocycleOnGenerators& c);

// P||(1 - S) for a T-invariant P.
InducedVector check_c_membership_form(const InducedVector& P, double invariance_tol = 1e-10);

}  // namespace halfint
