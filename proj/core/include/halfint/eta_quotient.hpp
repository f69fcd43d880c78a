#pragma once

#include <map>
#include <string>
#include <vector>

#include "halfint/group_words.hpp"
#include "halfint/modular_forms.hpp"

namespace halfint {

// prod_{d | N} eta(d z)^{r_d}.
struct EtaQuotient {
  int level = 4;
  std::map<int, int> exponents;

  int weight_times_two() const;
  // Sum of d r_d; the order at infinity is this divided by 24.
  long infinity_sum() const;
  void validate() const;
  std::string to_string() const;
  friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;
};

std::vector<int> divisors(int n);

// Order of vanishing at the cusp 1/c (c | N) in the local uniformizer, via the Ligozat formula.
Rational cusp_order(const EtaQuotient& q, int c);

struct CuspOrders {
  std::vector<std::pair<int, Rational>> orders;  // (c, order at 1/c)
  bool holomorphic() const;
  bool cuspidal() const;
};

CuspOrders cusp_orders(const EtaQuotient& q);

// Exact integer q-series sum_{n>=0} c(n) q^n of prod eta(dz)^{r_d} / q^{(sum d r_d)/24}.
std::vector<BigInt> eta_product_series(const EtaQuotient& q, int terms);

// Cusp-form expansion a(1..M); rejects non-cuspidal quotients with the offending cusp order.
FourierExpansion eta_expansion(const EtaQuotient& q, int M);

struct FrickeImage {
  EtaQuotient image;
  // f(-1/(N z)) = scalar (-i sqrt(N) z)^k f'(z).
  Complex scalar;
};

FrickeImage eta_fricke(const EtaQuotient& q);

// Exponent vectors within [-bound, bound]^{#divisors} giving cusp forms of the requested weight.
std::vector<EtaQuotient> eta_search(int weight_times_two, int level, int bound);

}  // namespace halfint
