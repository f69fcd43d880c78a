#include "halfint/group_words.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "halfint/errors.hpp"

namespace halfint {

namespace {

using boost::multiprecision::abs;

bool odd(const BigInt& x) { return abs(x) % 2 == 1; }

int sign(const BigInt& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// q with |num - q*den| <= |den|/2.
BigInt nearest_quotient(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  BigInt r = num - q * den;
  if (2 * abs(r) > abs(den)) q += sign(r) * sign(den);
  return q;
}

long to_long(const BigInt& x) {
  if (x > std::numeric_limits<long>::max() || x < std::numeric_limits<long>::min()) {
    throw DomainError("exponent out of range");
  }
  return x.convert_to<long>();
}

void push_letter(std::vector<Letter>& letters, Generator gen, long e) {
  if (e == 0) return;
  if (!letters.empty() && letters.back().gen == gen) {
    letters.back().exponent += e;
    if (letters.back().exponent == 0) letters.pop_back();
    return;
  }
  letters.push_back({gen, e});
}

// Word for the inverses of collected left factors, followed by the residual.
Word finish(GroupTag tag, const std::vector<Letter>& left_factors, const std::vector<Letter>& residual) {
  Word w{tag, {}};
  for (const auto& l : left_factors) push_letter(w.letters, l.gen, -l.exponent);
  for (const auto& l : residual) push_letter(w.letters, l.gen, l.exponent);
  // S^2 = -1 in SL2: fold pairs so that S exponents stay in {1, -1}.
  std::vector<Letter> out;
  long signs = 0;
  for (auto l : w.letters) {
    if (l.gen == Generator::S) {
      long e = l.exponent;
      signs += (e >= 0 ? e : -e) / 2;
      e %= 2;
      if (e == -1) {
        e = 1;
        ++signs;
      }
      l.exponent = e;
    }
    if (l.gen == Generator::NegOne) {
      signs += l.exponent;
      continue;
    }
    push_letter(out, l.gen, l.exponent);
  }
  if (signs % 2 != 0) out.insert(out.begin(), Letter{Generator::NegOne, 1});
  w.letters = std::move(out);
  return w;
}

// Reduces an upper-triangular residual (a, b; 0, a) with a = +-1 to +-T^{ab}.
std::vector<Letter> translation_residual(const Matrix2& m, Generator gen, long step) {
  std::vector<Letter> out;
  BigInt e = m.a * m.b;
  if (e % step != 0) throw MembershipError("translation part is not a power of the generator");
  if (m.a < 0) out.push_back({Generator::NegOne, 1});
  long ex = to_long(e / step);
  if (ex != 0) out.push_back({gen, ex});
  return out;
}

}  // namespace

GroupElement GroupElement::from(long a, long b, long c, long d) {
  GroupElement g{{a, b, c, d}, 0};
  if (g.m.det() != 1) throw DomainError("group element must have determinant 1");
  return g;
}

GroupElement GroupElement::fricke_involution(long level) {
  if (level <= 0) throw DomainError("Fricke level must be positive");
  return {{0, -1, level, 0}, level};
}

double GroupElement::a() const { return m.a.convert_to<double>() / (fricke ? std::sqrt(double(fricke)) : 1.0); }
double GroupElement::b() const { return m.b.convert_to<double>() / (fricke ? std::sqrt(double(fricke)) : 1.0); }
double GroupElement::c() const { return m.c.convert_to<double>() / (fricke ? std::sqrt(double(fricke)) : 1.0); }
double GroupElement::d() const { return m.d.convert_to<double>() / (fricke ? std::sqrt(double(fricke)) : 1.0); }

Complex GroupElement::act(Complex z) const {
  double a = m.a.convert_to<double>(), b = m.b.convert_to<double>();
  double c = m.c.convert_to<double>(), d = m.d.convert_to<double>();
  return (a * z + b) / (c * z + d);
}

GroupElement operator*(const GroupElement& x, const GroupElement& y) {
  GroupElement out{x.m * y.m, 0};
  if (x.fricke && y.fricke) {
    if (x.fricke != y.fricke) throw DomainError("cannot multiply Fricke elements of different levels");
    BigInt n = x.fricke;
    if (out.m.a % n != 0 || out.m.b % n != 0 || out.m.c % n != 0 || out.m.d % n != 0) {
      throw MembershipError("product leaves the normalizer of Gamma_0(N)");
    }
    out.m = {out.m.a / n, out.m.b / n, out.m.c / n, out.m.d / n};
  } else {
    out.fricke = x.fricke ? x.fricke : y.fricke;
  }
  return out;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << "(" << m.a << "," << m.b << ";" << m.c << "," << m.d << ")";
  if (fricke) os << "/sqrt(" << fricke << ")";
  return os.str();
}

GroupElement power(const GroupElement& g, long e) {
  GroupElement base = e >= 0 ? g : g.inverse();
  unsigned long n = e >= 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-(e + 1)) + 1;
  GroupElement out = GroupElement::identity();
  while (n) {
    if (n & 1) out = out * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return out;
}

bool equal_up_to_sign(const GroupElement& x, const GroupElement& y) { return x == y || x == -y; }

bool in_gamma0(const GroupElement& g, long level) { return !g.fricke && g.m.det() == 1 && g.m.c % level == 0; }

GroupElement generator_element(Generator gen) {
  switch (gen) {
    case Generator::NegOne: return GroupElement::from(-1, 0, 0, -1);
    case Generator::T: return GroupElement::from(1, 1, 0, 1);
    case Generator::V: return GroupElement::from(1, 0, 4, 1);
    case Generator::W: return GroupElement::fricke_involution(4);
    case Generator::T2: return GroupElement::from(1, 2, 0, 1);
    case Generator::S: return GroupElement::from(0, -1, 1, 0);
  }
  throw std::logic_error("unknown generator");
}

std::string generator_name(Generator gen) {
  switch (gen) {
    case Generator::NegOne: return "-1";
    case Generator::T: return "T";
    case Generator::V: return "V";
    case Generator::W: return "W4";
    case Generator::T2: return "T2";
    case Generator::S: return "S";
  }
  return "?";
}

GroupElement recompose(const Word& word) {
  GroupElement out = GroupElement::identity();
  for (const auto& l : word.letters) out = out * power(generator_element(l.gen), l.exponent);
  return out;
}

Word decompose_gamma04star(const GroupElement& g) {
  if (g.fricke) {
    if (g.fricke != 4) throw MembershipError("Fricke element of level other than 4");
    GroupElement rest = generator_element(Generator::W).inverse() * g;
    Word w = decompose_gamma04star(rest);
    w.letters.insert(w.letters.begin(), Letter{Generator::W, 1});
    return w;
  }
  if (!in_gamma0(g, 4)) throw MembershipError("element " + g.to_string() + " is not in Gamma_0(4)^*");
  Matrix2 m = g.m;
  std::vector<Letter> left;
  while (m.c != 0) {
    BigInt t = -nearest_quotient(m.a, m.c);
    if (t != 0) {
      m = {m.a + t * m.c, m.b + t * m.d, m.c, m.d};
      left.push_back({Generator::T, to_long(t)});
    }
    BigInt v = -nearest_quotient(m.c, 4 * m.a);
    if (v != 0) {
      m = {m.a, m.b, m.c + 4 * v * m.a, m.d + 4 * v * m.b};
      left.push_back({Generator::V, to_long(v)});
    }
  }
  return finish(GroupTag::Gamma04Star, left, translation_residual(m, Generator::T, 1));
}

bool in_theta_group(const GroupElement& g) {
  if (g.fricke) return false;
  const Matrix2& m = g.m;
  bool identity_class = odd(m.a) && odd(m.d) && !odd(m.b) && !odd(m.c);
  bool s_class = !odd(m.a) && !odd(m.d) && odd(m.b) && odd(m.c);
  return identity_class || s_class;
}

Word decompose_theta(const GroupElement& g) {
  if (!in_theta_group(g)) throw MembershipError("element " + g.to_string() + " is not in the theta group");
  Matrix2 m = g.m;
  std::vector<Letter> left;
  while (m.c != 0) {
    BigInt t = -nearest_quotient(m.a, 2 * m.c);
    if (t != 0) {
      m = {m.a + 2 * t * m.c, m.b + 2 * t * m.d, m.c, m.d};
      left.push_back({Generator::T2, to_long(t)});
    }
    if (m.a == 0 || abs(m.a) < abs(m.c)) {
      m = {-m.c, -m.d, m.a, m.b};
      left.push_back({Generator::S, 1});
    }
  }
  return finish(GroupTag::H2, left, translation_residual(m, Generator::T2, 2));
}

Word decompose_psl2z(const GroupElement& g) {
  if (g.fricke || g.m.det() != 1) throw MembershipError("element is not in SL2(Z)");
  Matrix2 m = g.m;
  std::vector<Letter> left;
  while (m.c != 0) {
    BigInt t = -nearest_quotient(m.a, m.c);
    if (t != 0) {
      m = {m.a + t * m.c, m.b + t * m.d, m.c, m.d};
      left.push_back({Generator::T, to_long(t)});
    }
    if (m.c != 0) {
      m = {-m.c, -m.d, m.a, m.b};
      left.push_back({Generator::S, 1});
    }
  }
  return finish(GroupTag::PSL2Z, left, translation_residual(m, Generator::T, 1));
}

std::string coset_name(CosetRep x) {
  switch (x) {
    case CosetRep::One: return "1";
    case CosetRep::T: return "T";
    case CosetRep::U: return "U";
  }
  return "?";
}

GroupElement coset_element(CosetRep x) {
  switch (x) {
    case CosetRep::One: return GroupElement::identity();
    case CosetRep::T: return GroupElement::from(1, 1, 0, 1);
    case CosetRep::U: return GroupElement::from(1, -1, 1, 0);
  }
  throw std::logic_error("unknown coset");
}

CosetRep coset_u(const GroupElement& x) {
  if (x.fricke) throw MembershipError("coset_u expects an element of SL2(Z)");
  int a = odd(x.m.a), b = odd(x.m.b), c = odd(x.m.c), d = odd(x.m.d);
  // H(2) mod 2 is {I, S}; the cosets are {I, S}, {T, ST}, {U, SU}.
  if (c == 0) return b == 0 ? CosetRep::One : CosetRep::T;  // I, T
  if (a == 0) return d == 0 ? CosetRep::One : CosetRep::T;  // S, ST = (0,1;1,1)
  return CosetRep::U;                                       // U = (1,1;1,0), SU = (1,0;1,1)
}

GroupElement kappa(CosetRep x, const GroupElement& g) {
  GroupElement ux = coset_element(x);
  GroupElement xg = ux * g;
  GroupElement out = ux * g * coset_element(coset_u(xg)).inverse();
  if (!in_theta_group(out)) throw std::logic_error("kappa left the theta group: " + out.to_string());
  return out;
}

Character Character::for_weight(int k_times_two) {
  double e = 2.5 - k_times_two / 2.0;
  Character chi;
  chi.value_W = i_pow(e);
  chi.value_neg1 = i_pow(2.0 * e);
  return chi;
}

void Character::validate() const {
  auto unit = [](Complex v) { return std::abs(std::abs(v) - 1.0) < 1e-12; };
  if (!unit(value_T) || !unit(value_W) || !unit(value_neg1)) throw DomainError("character values must be unimodular");
  if (std::abs(std::pow(value_W, 4) - 1.0) > 1e-12) throw DomainError("character must satisfy chi(W)^4 = 1");
  if (std::abs(value_neg1 * value_neg1 - 1.0) > 1e-12) throw DomainError("character must satisfy chi(-1)^2 = 1");
}

bool Character::is_trivial() const {
  return std::abs(value_T - 1.0) < 1e-14 && std::abs(value_W - 1.0) < 1e-14 && std::abs(value_neg1 - 1.0) < 1e-14;
}

Complex Character::generator_value(Generator gen) const {
  switch (gen) {
    case Generator::NegOne: return value_neg1;
    case Generator::T: return value_T;
    case Generator::V: return 1.0 / value_T;  // V = W T^{-1} W^{-1}
    case Generator::W: return value_W;
    default: throw DomainError("character is defined on Gamma_0(4)^* generators only");
  }
}

Complex Character::operator()(const GroupElement& g) const {
  Word w = decompose_gamma04star(g);
  Complex out = 1.0;
  for (const auto& l : w.letters) out *= std::pow(generator_value(l.gen), double(l.exponent));
  return out;
}

GroupElement random_element(GroupTag group, int max_length, std::mt19937_64& rng) {
  std::vector<Generator> gens;
  switch (group) {
    case GroupTag::Gamma04Star: gens = {Generator::T, Generator::V, Generator::W, Generator::NegOne}; break;
    case GroupTag::H2: gens = {Generator::T2, Generator::S}; break;
    case GroupTag::PSL2Z: gens = {Generator::T, Generator::S}; break;
  }
  std::uniform_int_distribution<int> length(1, max_length);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<long> exponent(-3, 3);
  GroupElement out = GroupElement::identity();
  int n = length(rng);
  for (int j = 0; j < n; ++j) {
    long e = 0;
    while (e == 0) e = exponent(rng);
    out = out * power(generator_element(gens[pick(rng)]), e);
  }
  return out;
}

}  // namespace halfint
