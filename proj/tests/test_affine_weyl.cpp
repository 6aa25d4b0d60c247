#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affcell/affine_weyl.hpp"
#include "affcell/errors.hpp"

#include <set>

using namespace affcell;

namespace {

/// x <= w iff x is a subword of a reduced word of w (brute force).
bool subword_leq(const AffineWeylGroup& g, const AffineElement& x, const AffineElement& w) {
  const auto word = g.canonical_word(w);
  const std::size_t n = word.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    AffineElement y = g.identity();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) y = g.right_multiply(y, word[i]);
    if (y == x) return true;
  }
  return false;
}

} // namespace

TEST_CASE("group law") {
  AffineWeylGroup g(TypeLabel::A1);
  const AffineElement s0 = g.generator(0), s1 = g.generator(1);
  CHECK(g.multiply(g.identity(), s0) == s0);
  CHECK(g.multiply(s0, s0) == g.identity());
  const AffineElement t = g.multiply(s0, s1);
  CHECK(t.finite == g.datum().weyl().identity());
  CHECK(std::abs(t.translation[0]) == 2);
  CHECK(g.to_string(g.identity()) == "e");
  CHECK(g.to_string(g.parse("0.1.0")) == "0.1.0");
  CHECK(g.parse("1.1") == g.identity());
  CHECK_THROWS_AS(g.parse("0.2"), Error);
}

TEST_CASE("Coxeter relations") {
  for (TypeLabel t : {TypeLabel::A1, TypeLabel::A2, TypeLabel::C2, TypeLabel::G2}) {
    AffineWeylGroup g(t);
    for (int s = 0; s < g.generator_count(); ++s)
      for (int u = 0; u < g.generator_count(); ++u) {
        const int m = g.coxeter_entry(s, u);
        AffineElement x = g.identity();
        for (int k = 0; k < (m ? m : 12); ++k) x = g.multiply(x, g.multiply(g.generator(s), g.generator(u)));
        if (m) CHECK(x == g.identity());
        else CHECK(x != g.identity());
      }
  }
}

TEST_CASE("length") {
  AffineWeylGroup g(TypeLabel::A1);
  CHECK(g.length(g.identity()) == 0);
  CHECK(g.length(g.generator(0)) == 1);
  CHECK(g.length(g.generator(1)) == 1);
  for (int n = 0; n < 6; ++n) {
    const AffineElement t = g.translation(Coweight{2 * n});
    CHECK(g.length(t) == 2 * n);
    std::vector<int> word;
    for (int k = 0; k < n; ++k) word.insert(word.end(), {0, 1});
    CHECK(g.length(g.from_word(word)) == 2 * n);
  }
  AffineWeylGroup g2(TypeLabel::G2);
  for (const auto& x : g2.enumerate_ball(8)) CHECK(static_cast<int>(g2.canonical_word(x).size()) == g2.length(x));
}

TEST_CASE("descents") {
  AffineWeylGroup g(TypeLabel::A1);
  CHECK(g.descents(g.identity(), Side::Left) == 0);
  CHECK(g.descents(g.generator(1), Side::Left) == 2u);
  CHECK(g.descents(g.generator(1), Side::Right) == 2u);
  const AffineElement x = g.parse("0.1.0");
  CHECK(g.descents(x, Side::Left) == 1u);
  CHECK(g.descents(x, Side::Right) == 1u);
  AffineWeylGroup a2(TypeLabel::A2);
  for (const auto& w : a2.enumerate_ball(6))
    for (int s = 0; s < 3; ++s)
      CHECK(a2.is_left_descent(s, w) == (a2.length(a2.left_multiply(s, w)) < a2.length(w)));
}

TEST_CASE("minimal double coset representatives") {
  AffineWeylGroup g(TypeLabel::A1);
  CHECK(g.is_min_double_coset_rep(g.identity()));
  CHECK(!g.is_min_double_coset_rep(g.generator(1)));
  CHECK(g.is_min_double_coset_rep(g.generator(0)));
  CHECK(g.is_min_double_coset_rep(g.parse("0.1.0")));
  CHECK(!g.is_min_double_coset_rep(g.parse("0.1")));
}

TEST_CASE("Bruhat order") {
  AffineWeylGroup g(TypeLabel::A1);
  const AffineElement w = g.parse("1.0.1");
  CHECK(g.bruhat_leq(g.identity(), w));
  CHECK(g.bruhat_leq(w, w));
  CHECK(!g.bruhat_leq(g.parse("0.1.0"), w));
  CHECK(g.bruhat_leq(g.parse("0.1"), w));
  CHECK(!g.bruhat_leq(g.parse("0.1.0.1"), w));
  CHECK(g.bruhat_leq(g.generator(1), w));
  CHECK(g.bruhat_leq(g.generator(0), w));
  for (TypeLabel t : {TypeLabel::A2, TypeLabel::C2}) {
    AffineWeylGroup h(t);
    const auto ball = h.enumerate_ball(5);
    for (const auto& x : ball)
      for (const auto& y : ball) CHECK(h.bruhat_leq(x, y) == subword_leq(h, x, y));
  }
}

TEST_CASE("ball enumeration") {
  AffineWeylGroup a1(TypeLabel::A1), a2(TypeLabel::A2), c2(TypeLabel::C2), g2(TypeLabel::G2);
  CHECK(a1.enumerate_ball(0).size() == 1);
  CHECK(a1.enumerate_ball(3).size() == 7);
  CHECK(a2.enumerate_ball(2).size() == 10);
  CHECK(a2.enumerate_ball(12).size() == 235);
  CHECK(c2.enumerate_ball(12).size() == 209);
  CHECK(g2.enumerate_ball(12).size() == 189);
  // Growth of Aff(A2): shells of size 3n.
  const auto ball = a2.enumerate_ball(9);
  std::vector<int> shell(10);
  for (const auto& x : ball) ++shell[static_cast<std::size_t>(a2.length(x))];
  for (int n = 1; n <= 9; ++n) CHECK(shell[static_cast<std::size_t>(n)] == 3 * n);
  std::set<AffineElement> seen(ball.begin(), ball.end());
  CHECK(seen.size() == ball.size());
  for (std::size_t i = 1; i < ball.size(); ++i) CHECK(a2.length(ball[i - 1]) <= a2.length(ball[i]));
}

TEST_CASE("inverse and double coset weight") {
  AffineWeylGroup g(TypeLabel::C2);
  for (const auto& x : g.enumerate_ball(6)) {
    CHECK(g.multiply(x, g.inverse(x)) == g.identity());
    CHECK(g.length(g.inverse(x)) == g.length(x));
    CHECK(g.datum().is_dominant(g.double_coset_weight(x)));
  }
  AffineWeylGroup a1(TypeLabel::A1);
  CHECK(a1.double_coset_weight(a1.parse("0")) == Coweight{2});
  CHECK(a1.double_coset_weight(a1.parse("0.1.0")) == Coweight{4});
}
