#include "halfint/eta_quotient.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "halfint/errors.hpp"

namespace halfint {

int EtaQuotient::weight_times_two() const {
  int s = 0;
  for (auto [d, r] : exponents) s += r;
  return s;
}

long EtaQuotient::infinity_sum() const {
  long s = 0;
  for (auto [d, r] : exponents) s += long(d) * r;
  return s;
}

void EtaQuotient::validate() const {
  if (level <= 0) throw DomainError("eta quotient level must be positive");
  long zero_sum = 0;
  for (auto [d, r] : exponents) {
    if (d <= 0 || level % d != 0) throw DomainError("eta exponent index " + std::to_string(d) + " does not divide the level");
    zero_sum += long(level / d) * r;
  }
  if (infinity_sum() % 24 != 0) throw DomainError("sum of d r_d must be divisible by 24");
  if (zero_sum % 24 != 0) throw DomainError("sum of (N/d) r_d must be divisible by 24");
}

std::string EtaQuotient::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto [d, r] : exponents) {
    if (r == 0) continue;
    os << (first ? "" : ", ") << d << ": " << r;
    first = false;
  }
  os << "} N=" << level;
  return os.str();
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

Rational cusp_order(const EtaQuotient& q, int c) {
  if (c <= 0 || q.level % c != 0) throw DomainError("cusp denominator must divide the level");
  long n = q.level;
  Rational sum(0);
  for (auto [delta, r] : q.exponents) {
    long g = std::gcd(long(c), long(delta));
    sum += Rational(g * g * long(r), long(delta));
  }
  return sum * Rational(n, 24L * std::gcd(long(c), n / c) * c);
}

bool CuspOrders::holomorphic() const {
  for (const auto& [c, o] : orders)
    if (o < 0) return false;
  return true;
}

bool CuspOrders::cuspidal() const {
  for (const auto& [c, o] : orders)
    if (o <= 0) return false;
  return true;
}

CuspOrders cusp_orders(const EtaQuotient& q) {
  CuspOrders out;
  for (int c : divisors(q.level)) out.orders.emplace_back(c, cusp_order(q, c));
  return out;
}

std::vector<BigInt> eta_product_series(const EtaQuotient& q, int terms) {
  if (terms < 1) throw DomainError("series needs at least one term");
  // prod_m (1 - q^m)^{e_m}; logarithmic derivative gives n c_n = sum_j b_j c_{n-j}.
  std::vector<long> e(terms, 0);
  for (auto [d, r] : q.exponents)
    for (long m = d; m < terms; m += d) e[m] += r;
  std::vector<BigInt> b(terms, 0);
  for (long m = 1; m < terms; ++m)
    if (e[m] != 0)
      for (long n = m; n < terms; n += m) b[n] -= BigInt(m) * e[m];
  std::vector<BigInt> c(terms, 0);
  c[0] = 1;
  for (long n = 1; n < terms; ++n) {
    BigInt acc = 0;
    for (long j = 1; j <= n; ++j)
      if (b[j] != 0) acc += b[j] * c[n - j];
    c[n] = acc / n;
  }
  return c;
}

FourierExpansion eta_expansion(const EtaQuotient& q, int M) {
  q.validate();
  if (M < 1) throw DomainError("truncation must be at least 1");
  CuspOrders orders = cusp_orders(q);
  for (const auto& [c, o] : orders.orders) {
    if (o <= 0) {
      std::ostringstream os;
      os << "eta quotient " << q.to_string() << " is not cuspidal: order " << o.numerator() << "/" << o.denominator()
         << " at cusp 1/" << c;
      throw DomainError(os.str());
    }
  }
  long h = q.infinity_sum() / 24;
  auto series = eta_product_series(q, M);
  FourierExpansion f;
  f.weight_times_two = q.weight_times_two();
  f.level = q.level;
  f.cusp_width = 1;
  f.coefficients.assign(M, 0.0);
  for (long n = h; n <= M; ++n) f.coefficients[n - 1] = series[n - h].convert_to<double>();
  f.source = "eta-quotient:" + q.to_string();
  f.label = "eta" + q.to_string();
  FrickeImage fr = eta_fricke(q);
  if (fr.image == q) f.fricke_eigenvalue = fr.scalar;
  return f;
}

FrickeImage eta_fricke(const EtaQuotient& q) {
  FrickeImage out;
  out.image.level = q.level;
  double log_scalar = 0.0;
  double k = q.weight_times_two() / 2.0;
  for (auto [d, r] : q.exponents) {
    if (r == 0) continue;
    out.image.exponents[q.level / d] = r;
    log_scalar += 0.5 * r * std::log(double(q.level) / d);
  }
  log_scalar -= 0.5 * k * std::log(double(q.level));
  out.scalar = std::exp(log_scalar);
  return out;
}

std::vector<EtaQuotient> eta_search(int weight_times_two, int level, int bound) {
  if (level <= 0 || level % 4 != 0) throw DomainError("eta search needs a level divisible by 4");
  std::vector<int> ds = divisors(level);
  std::vector<EtaQuotient> out;
  std::vector<int> r(ds.size(), -bound);
  std::size_t free = ds.size() - 1;
  while (true) {
    int partial = 0;
    for (std::size_t j = 0; j < free; ++j) partial += r[j];
    int last = weight_times_two - partial;
    if (std::abs(last) <= bound) {
      EtaQuotient q{level, {}};
      for (std::size_t j = 0; j < free; ++j)
        if (r[j] != 0) q.exponents[ds[j]] = r[j];
      if (last != 0) q.exponents[ds[free]] = last;
      bool ok = true;
      try {
        q.validate();
      } catch (const DomainError&) {
        ok = false;
      }
      if (ok && cusp_orders(q).cuspidal()) out.push_back(q);
    }
    std::size_t j = 0;
    while (j < free && r[j] == bound) r[j++] = -bound;
    if (j == free) break;
    ++r[j];
  }
  return out;
}

}  // namespace halfint
