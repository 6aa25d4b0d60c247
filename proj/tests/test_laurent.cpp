#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affcell/laurent.hpp"

#include <random>

using namespace affcell;

namespace {

const LaurentPoly v = LaurentPoly::v();
const LaurentPoly vi = LaurentPoly::v_inv();

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-4, 4), coef(-3, 3), count(0, 4);
  LaurentPoly p;
  for (int i = count(rng); i > 0; --i) p += LaurentPoly::monomial(exp(rng), coef(rng));
  return p;
}

} // namespace

TEST_CASE("products") {
  CHECK((v + vi) * (v + vi) == LaurentPoly::monomial(2) + 2 + LaurentPoly::monomial(-2));
  CHECK((LaurentPoly(0) * (v + 3)).is_zero());
  CHECK((v - 1) * (v + 1) == LaurentPoly::monomial(2) - 1);
}

TEST_CASE("bar involution") {
  CHECK((LaurentPoly::monomial(2) + v).bar() == LaurentPoly::monomial(-2) + vi);
  CHECK((v + vi).bar() == v + vi);
  CHECK(LaurentPoly(5).bar() == LaurentPoly(5));
  CHECK((v + vi).is_bar_invariant());
}

TEST_CASE("coefficients") {
  CHECK(LaurentPoly(LaurentPoly::monomial(2) + 2).coeff_at(0) == 2);
  CHECK(LaurentPoly::monomial(2).coeff_at(5) == 0);
  CHECK(LaurentPoly::monomial(-1, 3).coeff_at(-1) == 3);
  CHECK((v - v).is_zero());
  CHECK((v - v).terms().empty());
  CHECK((LaurentPoly::monomial(3) + vi).min_exponent() == -1);
  CHECK((LaurentPoly::monomial(3) + vi).max_exponent() == 3);
  CHECK(!LaurentPoly().min_exponent());
}

TEST_CASE("positive part and evaluation") {
  const LaurentPoly p = LaurentPoly::monomial(2, 4) + 7 + LaurentPoly::monomial(-3, 2) + v;
  CHECK(p.positive_part() == LaurentPoly::monomial(2, 4) + v);
  CHECK(p.at_one() == 14);
  CHECK(p.shifted(3) == p * LaurentPoly::monomial(3));
}

TEST_CASE("serialization round trip") {
  const LaurentPoly p = LaurentPoly::monomial(-2, -5) + 1 + LaurentPoly::monomial(4, 3);
  const auto pairs = p.to_pairs();
  REQUIRE(pairs.size() == 3);
  CHECK(pairs.front().first == -2);
  CHECK(pairs.back().first == 4);
  CHECK(LaurentPoly::from_terms(pairs) == p);
  CHECK(LaurentPoly::from_terms({{1, 2}, {1, -2}, {0, 1}}) == LaurentPoly(1));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(12345);
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK(a - a == LaurentPoly());
    LaurentPoly d = a;
    d.add_product(b, c);
    CHECK(d == a + b * c);
  }
}

TEST_CASE("big coefficients stay exact") {
  LaurentPoly p = v + 1;
  for (int i = 0; i < 6; ++i) p = p * p;
  CHECK(p.coeff_at(32) == Integer("1832624140942590534"));
  CHECK(p.at_one() == Integer(1) << 64);
}
