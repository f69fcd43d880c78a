#include <random>

#include "doctest.h"
#include "halfint/errors.hpp"
#include "halfint/group_words.hpp"

using namespace halfint;

TEST_SUITE("group_words") {
  TEST_CASE("generators") {
    CHECK(generator_element(Generator::T) == GroupElement::from(1, 1, 0, 1));
    CHECK(generator_element(Generator::S) == GroupElement::from(0, -1, 1, 0));
    const GroupElement S = generator_element(Generator::S);
    CHECK(S * S == -GroupElement::identity());
    const GroupElement W = generator_element(Generator::W);
    CHECK(W.is_fricke());
    CHECK(equal_up_to_sign(W * W, GroupElement::identity()));
  }

  TEST_CASE("random word round trips are exact") {
    std::mt19937_64 rng(0);
    for (int j = 0; j < 300; ++j) {
      const GroupElement g = random_element(GroupTag::PSL2Z, 12, rng);
      const Word w = decompose_psl2z(g);
      CHECK(w.group == GroupTag::PSL2Z);
      CHECK(recompose(w) == g);

      const GroupElement h = random_element(GroupTag::H2, 12, rng);
      CHECK(in_theta_group(h));
      CHECK(recompose(decompose_theta(h)) == h);

      const GroupElement q = random_element(GroupTag::Gamma04Star, 12, rng);
      CHECK(recompose(decompose_gamma04star(q)) == q);
    }
  }

  TEST_CASE("theta words use only S and T^2") {
    std::mt19937_64 rng(1);
    for (int j = 0; j < 50; ++j) {
      for (const Letter& l : decompose_theta(random_element(GroupTag::H2, 10, rng)).letters) {
        CHECK((l.gen == Generator::S || l.gen == Generator::T2 || l.gen == Generator::NegOne));
      }
    }
  }

  TEST_CASE("membership errors") {
    CHECK_THROWS_AS(decompose_theta(GroupElement::from(1, 1, 0, 1)), MembershipError);
    CHECK_THROWS_AS(decompose_gamma04star(GroupElement::from(1, 0, 2, 1)), MembershipError);
  }

  TEST_CASE("coset representatives") {
    CHECK(coset_u(GroupElement::identity()) == CosetRep::One);
    CHECK(coset_u(generator_element(Generator::S)) == CosetRep::One);
    CHECK(coset_u(generator_element(Generator::T)) == CosetRep::T);
    CHECK(coset_u(coset_element(CosetRep::U)) == CosetRep::U);
    for (CosetRep x : kCosets) CHECK(coset_u(coset_element(x)) == x);
  }

  TEST_CASE("kappa lands in H(2) and composes") {
    std::mt19937_64 rng(2);
    for (int j = 0; j < 200; ++j) {
      const GroupElement g = random_element(GroupTag::PSL2Z, 8, rng);
      const GroupElement h = random_element(GroupTag::PSL2Z, 8, rng);
      for (CosetRep x : kCosets) {
        const GroupElement lhs = kappa(x, g * h);
        const GroupElement rhs = kappa(x, g) * kappa(coset_u(coset_element(x) * g), h);
        CHECK(lhs == rhs);
        CHECK(in_theta_group(kappa(x, g)));
      }
    }
  }

  TEST_CASE("character of weight 13/2") {
    const Character chi = Character::for_weight(13);
    CHECK(std::abs(chi.value_W - i_pow(-4.0)) < 1e-15);
    CHECK(std::abs(chi.generator_value(Generator::V) * chi.generator_value(Generator::T) - 1.0) < 1e-15);
    CHECK(Character::trivial().is_trivial());
  }
}
