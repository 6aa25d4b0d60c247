#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affcell/errors.hpp"
#include "affcell/hecke.hpp"

#include <random>

using namespace affcell;

namespace {

const LaurentPoly v = LaurentPoly::v();
const LaurentPoly vi = LaurentPoly::v_inv();

HeckeElement random_element(const HeckeAlgebra& h, const std::vector<AffineElement>& ball, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  std::uniform_int_distribution<int> exp(-2, 2), coef(-2, 2);
  HeckeElement out;
  for (int i = 0; i < 3; ++i)
    out += h.standard(ball[pick(rng)]).scaled(LaurentPoly::monomial(exp(rng), coef(rng)));
  return out;
}

} // namespace

TEST_CASE("quadratic relation and reduced products") {
  AffineWeylGroup g(TypeLabel::A1);
  HeckeAlgebra h(g);
  const auto s0 = g.generator(0), s1 = g.generator(1);
  const HeckeElement ts = h.standard(s0);
  CHECK(h.mul_standard(h.one(), ts) == ts);
  HeckeElement expect = h.one();
  expect.add(s0, vi - v);
  CHECK(h.mul_standard(ts, ts) == expect);
  CHECK(h.mul_standard(h.mul_standard(ts, h.standard(s1)), ts) == h.standard(g.parse("0.1.0")));
  CHECK(h.left_mul_generator(0, h.standard(s1)) == h.standard(g.parse("0.1")));
  CHECK(h.right_mul_generator(h.standard(s1), 0) == h.standard(g.parse("1.0")));
}

TEST_CASE("inverse of T_x") {
  for (TypeLabel t : {TypeLabel::A2, TypeLabel::G2}) {
    AffineWeylGroup g(t);
    HeckeAlgebra h(g);
    for (const auto& x : g.enumerate_ball(5)) {
      CHECK(h.mul_standard(h.standard(x), h.inverse_standard(x)) == h.one());
      CHECK(h.mul_standard(h.inverse_standard(x), h.standard(x)) == h.one());
    }
  }
}

TEST_CASE("associativity and bar on random elements") {
  AffineWeylGroup g(TypeLabel::C2);
  HeckeAlgebra h(g);
  const auto ball = g.enumerate_ball(4);
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    const HeckeElement a = random_element(h, ball, rng), b = random_element(h, ball, rng),
                       c = random_element(h, ball, rng);
    CHECK(h.mul_standard(h.mul_standard(a, b), c) == h.mul_standard(a, h.mul_standard(b, c)));
    CHECK(h.bar(h.bar(a)) == a);
    CHECK(h.bar(h.mul_standard(a, b)) == h.mul_standard(h.bar(a), h.bar(b)));
  }
}

TEST_CASE("bar of generators") {
  AffineWeylGroup g(TypeLabel::A2);
  HeckeAlgebra h(g);
  for (int s = 0; s < 3; ++s) {
    HeckeElement expect = h.standard(g.generator(s));
    expect.add(g.identity(), v - vi);
    CHECK(h.bar(h.standard(g.generator(s))) == expect);
    HeckeElement cs = h.standard(g.generator(s));
    cs.add(g.identity(), v);
    CHECK(h.bar(cs) == cs);
  }
}

TEST_CASE("basis tags are enforced") {
  AffineWeylGroup g(TypeLabel::A1);
  HeckeElement a = HeckeElement::basis_element(Basis::Standard, g.identity());
  HeckeElement b = HeckeElement::basis_element(Basis::Canonical, g.identity());
  CHECK_THROWS_AS(a += b, BasisMismatch);
  HeckeAlgebra h(g);
  CHECK_THROWS_AS(h.mul_standard(a, b), BasisMismatch);
  HeckeElement z = a - a;
  CHECK(z.is_zero());
}
