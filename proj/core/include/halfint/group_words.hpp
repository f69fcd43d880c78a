#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <string>
#include <vector>

#include "halfint/special_functions.hpp"

namespace halfint {

using BigInt = boost::multiprecision::cpp_int;

struct Matrix2 {
  BigInt a{1}, b{0}, c{0}, d{1};

  BigInt det() const { return a * d - b * c; }
  Matrix2 adjugate() const { return {d, -b, -c, a}; }
  Matrix2 operator-() const { return {-a, -b, -c, -d}; }
  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

// An element of SL2(Z) (fricke == 0) or of the Atkin-Lehner coset W_N SL2-part
// (fricke == N): then the actual matrix is m / sqrt(N) with det m = N.
struct GroupElement {
  Matrix2 m;
  long fricke = 0;

  static GroupElement identity() { return {}; }
  static GroupElement from(long a, long b, long c, long d);
  static GroupElement fricke_involution(long level);

  GroupElement inverse() const { return {m.adjugate(), fricke}; }
  GroupElement operator-() const { return {-m, fricke}; }
  bool is_fricke() const { return fricke != 0; }

  // Entries of the actual matrix as doubles.
  double a() const;
  double b() const;
  double c() const;
  double d() const;
  Complex act(Complex z) const;

  friend GroupElement operator*(const GroupElement& x, const GroupElement& y);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  std::string to_string() const;
};

GroupElement power(const GroupElement& g, long e);
bool equal_up_to_sign(const GroupElement& x, const GroupElement& y);
bool in_gamma0(const GroupElement& g, long level);

enum class GroupTag { Gamma04Star, H2, PSL2Z };
enum class Generator { NegOne, T, V, W, T2, S };

struct Letter {
  Generator gen;
  long exponent;
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct Word {
  GroupTag group = GroupTag::PSL2Z;
  std::vector<Letter> letters;
};

GroupElement generator_element(Generator gen);
std::string generator_name(Generator gen);
GroupElement recompose(const Word& word);

// Word in {-1, T, V = (1,0;4,1), W_4}.
Word decompose_gamma04star(const GroupElement& g);
// Word in {T^2, S} (and -1 to keep recomposition exact in SL2).
Word decompose_theta(const GroupElement& g);
// Word in {T, S} (and -1).
Word decompose_psl2z(const GroupElement& g);

bool in_theta_group(const GroupElement& g);

enum class CosetRep { One, T, U };
inline constexpr CosetRep kCosets[3] = {CosetRep::One, CosetRep::T, CosetRep::U};

std::string coset_name(CosetRep x);
GroupElement coset_element(CosetRep x);
CosetRep coset_u(const GroupElement& x);
// kappa_{x,g} = u(x) g u(xg)^{-1}, an element of H(2).
GroupElement kappa(CosetRep x, const GroupElement& g);

// Character on Gamma_0(4)^* given by its values on T, W_4 and -1.
struct Character {
  Complex value_T{1.0, 0.0};
  Complex value_W{1.0, 0.0};
  Complex value_neg1{1.0, 0.0};

  static Character trivial() { return {}; }
  // chi(T) = 1, chi(W_4) = i^{5/2-k}, chi(-1) = (-1)^{5/2-k}.
  static Character for_weight(int k_times_two);

  void validate() const;
  bool is_trivial() const;
  Complex generator_value(Generator gen) const;
  Complex operator()(const GroupElement& g) const;
};

// Random product of generators of the given group with 1..max_length letters.
GroupElement random_element(GroupTag group, int max_length, std::mt19937_64& rng);

}  // namespace halfint
