#pragma once

#include <vector>

#include "halfint/special_functions.hpp"

namespace halfint {

// Dense polynomial in the monomial basis, coefficient j multiplies z^j.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {}
  static Polynomial zero(int degree_bound) { return Polynomial(std::vector<Complex>(degree_bound + 1)); }
  static Polynomial monomial(int degree_bound, int j, Complex c = 1.0);

  int degree_bound() const { return int(coeffs_.size()) - 1; }
  const std::vector<Complex>& coefficients() const { return coeffs_; }
  Complex operator[](int j) const { return j < int(coeffs_.size()) ? coeffs_[j] : Complex(0.0); }
  Complex& operator[](int j) { return coeffs_[j]; }

  Complex operator()(Complex z) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(Complex c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Complex c, Polynomial p) { return p *= c; }
  Polynomial operator-() const;

  Polynomial times(const Polynomial& other) const;

  // P(alpha z + beta), same degree bound.
  Polynomial substitute_affine(Complex alpha, Complex beta) const;

  // Euclidean norm of the coefficient vector.
  double norm() const;
  double max_abs() const;

  // Even or odd powers only.
  Polynomial even_part() const;
  Polynomial odd_part() const;

 private:
  std::vector<Complex> coeffs_;
};

// Coefficients of the unique polynomial of degree <= nodes.size()-1 through (nodes, values).
Polynomial interpolate(const std::vector<Complex>& nodes, const std::vector<Complex>& values);

}  // namespace halfint
