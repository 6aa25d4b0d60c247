#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affcell/bernstein.hpp"
#include "affcell/dual.hpp"
#include "affcell/errors.hpp"
#include "affcell/verify.hpp"
#include "affcell/workspace.hpp"

using namespace affcell;

TEST_CASE("theta") {
  AffineWeylGroup g(TypeLabel::A1);
  HeckeAlgebra h(g);
  CHECK(theta(h, Coweight{0}) == h.one());
  // alpha^vee is dominant: theta is the single basis element T_{t_alpha}.
  const AffineElement t = g.translation(Coweight{2});
  CHECK(theta(h, Coweight{2}) == h.standard(t));
  const HeckeElement neg = theta(h, Coweight{-2});
  CHECK(neg == h.inverse_standard(t));
  for (const auto& [x, c] : neg.terms()) CHECK(g.length(x) <= g.length(t));
  CHECK(h.mul_standard(theta(h, Coweight{2}), theta(h, Coweight{-2})) == h.one());
  CHECK(h.mul_standard(theta(h, Coweight{2}), theta(h, Coweight{4})) == theta(h, Coweight{6}));
}

TEST_CASE("dominant split") {
  CartanDatum d(TypeLabel::A2);
  for (const Coweight& l : {Coweight{1, 1}, Coweight{-1, 2}, Coweight{3, -3}, Coweight{-2, -2}}) {
    auto [a, b] = dominant_split(d, l);
    CHECK(a - b == l);
    CHECK(d.is_dominant(a));
    CHECK(d.is_dominant(b));
    CHECK(d.in_coroot_lattice(b));
  }
}

TEST_CASE("Bernstein central elements") {
  for (TypeLabel type : {TypeLabel::A1, TypeLabel::A2}) {
    AffineWeylGroup g(type);
    HeckeAlgebra h(g);
    CHECK(bernstein_central(h, g.datum().zero()).expansion == h.one());
    for (const auto& l : small_dominant_coweights(g.datum(), 2)) {
      const HeckeElement z = bernstein_central(h, l).expansion;
      CHECK(is_central(h, z));
      CHECK(h.bar(z) == z);
    }
    CHECK(!is_central(h, theta(h, small_dominant_coweights(g.datum(), 1).front())));
  }
  AffineWeylGroup g(TypeLabel::A2);
  HeckeAlgebra h(g);
  CHECK_THROWS_AS(bernstein_central(h, Coweight{1, 0}), Error);
}

TEST_CASE("phi_c on the identity cell in A1~") {
  Workspace ws(TypeLabel::A1, 10);
  const JElement unit = phi_c(ws.hecke().one(), ws.ring(), 0);
  CHECK(unit == ws.ring().unit(0));
  const JElement adj = phi_c(bernstein_central(ws.hecke(), Coweight{2}).expansion, ws.ring(), 0);
  const LaurentPoly expect = LaurentPoly::monomial(2) + 1 + LaurentPoly::monomial(-2);
  CHECK(adj == JElement{{0, expect}});
  CHECK(expect == trace_sv(ws.datum(), Coweight{2}, unipotent_classes(ws.datum()).front()));
  const JElement low = phi_c(bernstein_central(ws.hecke(), Coweight{2}).expansion, ws.ring(), 1);
  const auto& t = ws.table();
  CHECK(low == JElement{{*t.find_word("0.1.0"), 1}, {*t.find_word("1.0.1"), 1}});
}

TEST_CASE("phi_c rejects bounds that are too small") {
  Workspace ws(TypeLabel::A2, 10);
  const HeckeElement z = bernstein_central(ws.hecke(), Coweight{3, 3}).expansion;
  CHECK_THROWS_AS(phi_c(z, ws.ring(), ws.partition().cell_of_identity()), BoundExceeded);
}

TEST_CASE("Bernstein and phi checks") {
  Workspace ws(TypeLabel::A1, 10), larger(TypeLabel::A1, 12);
  const auto lambdas = small_dominant_coweights(ws.datum(), 2);
  for (const auto& c : check_bernstein(ws, lambdas)) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
  for (const auto& c : check_phi(ws, larger, lambdas)) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
  for (const auto& c : check_phi_traces(ws, lambdas)) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
}
