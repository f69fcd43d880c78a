#include "halfint/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "halfint/errors.hpp"

namespace halfint {

Polynomial Polynomial::monomial(int degree_bound, int j, Complex c) {
  Polynomial p = zero(std::max(degree_bound, j));
  p.coeffs_[j] = c;
  return p;
}

Complex Polynomial::operator()(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  return *this;
}

Polynomial& Polynomial::operator*=(Complex c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  p *= -1.0;
  return p;
}

Polynomial Polynomial::times(const Polynomial& other) const {
  if (coeffs_.empty() || other.coeffs_.empty()) return {};
  std::vector<Complex> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::substitute_affine(Complex alpha, Complex beta) const {
  Polynomial out = zero(degree_bound());
  Polynomial power({Complex(1.0)});
  Polynomial linear({beta, alpha});
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    Polynomial term = power;
    term *= coeffs_[j];
    out += term;
    power = power.times(linear);
  }
  out.coeffs_.resize(coeffs_.size());
  return out;
}

double Polynomial::norm() const {
  double s = 0.0;
  for (auto c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

double Polynomial::max_abs() const {
  double m = 0.0;
  for (auto c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Polynomial Polynomial::even_part() const {
  Polynomial p = *this;
  for (std::size_t j = 1; j < p.coeffs_.size(); j += 2) p.coeffs_[j] = 0.0;
  return p;
}

Polynomial Polynomial::odd_part() const {
  Polynomial p = *this;
  for (std::size_t j = 0; j < p.coeffs_.size(); j += 2) p.coeffs_[j] = 0.0;
  return p;
}

Polynomial interpolate(const std::vector<Complex>& nodes, const std::vector<Complex>& values) {
  if (nodes.size() != values.size() || nodes.empty()) {
    throw DomainError("interpolate: node and value counts must match and be non-empty");
  }
  // Newton divided differences, then expansion into the monomial basis.
  std::size_t n = nodes.size();
  std::vector<Complex> dd = values;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
  Polynomial out({dd[n - 1]});
  for (std::size_t i = n - 1; i-- > 0;) {
    out = out.times(Polynomial({-nodes[i], Complex(1.0)}));
    out += Polynomial({dd[i]});
  }
  std::vector<Complex> c = out.coefficients();
  c.resize(n);
  return Polynomial(std::move(c));
}

}  // namespace halfint
