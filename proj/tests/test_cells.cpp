#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affcell/cells.hpp"
#include "affcell/errors.hpp"
#include "affcell/verify.hpp"

using namespace affcell;

namespace {
const LaurentPoly v = LaurentPoly::v();
const LaurentPoly vi = LaurentPoly::v_inv();
} // namespace

TEST_CASE("canonical basis in low length") {
  AffineWeylGroup g(TypeLabel::A1);
  KLTable t(g, 6);
  HeckeAlgebra h(g);
  CHECK(canonical_basis_element(t, g.identity()) == h.one());
  HeckeElement cs = h.standard(g.generator(0));
  cs.add(g.identity(), v);
  CHECK(canonical_basis_element(t, g.generator(0)) == cs);
  // Infinite dihedral group: p_{x,w} = v^{l(w)-l(x)} on the whole Bruhat interval.
  const AffineElement w = g.parse("0.1");
  HeckeElement c01 = h.standard(w);
  c01.add(g.generator(0), v);
  c01.add(g.generator(1), v);
  c01.add(g.identity(), LaurentPoly::monomial(2));
  CHECK(canonical_basis_element(t, w) == c01);
  for (Index y = 0; y < t.size(); ++y)
    for (Index x = 0; x < t.size(); ++x) {
      const bool le = g.bruhat_leq(t.element(x), t.element(y));
      CHECK(t.p(x, y) == (le ? LaurentPoly::monomial(t.length(y) - t.length(x)) : LaurentPoly()));
    }
  CHECK(kl_polynomial(t, g.identity(), g.identity()) == LaurentPoly(1));
  CHECK(kl_polynomial(t, g.generator(0), g.generator(1)).is_zero());
}

TEST_CASE("recursion agrees with the bar-invariance solve") {
  for (TypeLabel type : {TypeLabel::A2, TypeLabel::C2, TypeLabel::G2}) {
    AffineWeylGroup g(type);
    HeckeAlgebra h(g);
    KLTable t(g, 7);
    for (Index w = 0; w < t.size(); ++w) {
      const auto row = kl_row_by_bar_solve(h, t, w);
      for (Index x = 0; x <= w; ++x) {
        auto it = row.find(x);
        CHECK(t.p(x, w) == (it == row.end() ? LaurentPoly() : it->second));
      }
    }
  }
}

TEST_CASE("non-trivial KL polynomials appear") {
  AffineWeylGroup g(TypeLabel::A2);
  KLTable t(g, 10);
  bool found = false;
  for (Index w = 0; w < t.size() && !found; ++w)
    for (Index x = 0; x < w; ++x)
      if (t.p(x, w).size() > 1) found = true;
  CHECK(found);
  CHECK(kl_polynomial(t, g.identity(), g.parse("1.2.1")) == LaurentPoly::monomial(3));
}

TEST_CASE("KL layer checks pass") {
  for (TypeLabel type : {TypeLabel::A1, TypeLabel::A2}) {
    AffineWeylGroup g(type);
    HeckeAlgebra h(g);
    KLTable t(g, 8);
    for (const auto& c : check_kl_layer(h, t, 8, 6)) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
  }
}

TEST_CASE("structure constants") {
  AffineWeylGroup g(TypeLabel::A1);
  KLTable t(g, 8);
  const auto s0 = g.generator(0);
  auto h1 = structure_constants(t, g.identity(), s0);
  CHECK(h1 == std::map<AffineElement, LaurentPoly>{{s0, LaurentPoly(1)}});
  auto h2 = structure_constants(t, s0, s0);
  CHECK(h2 == std::map<AffineElement, LaurentPoly>{{s0, v + vi}});
  // C_0 C_{1.0} = C_{0.1.0} + mu(0, 1.0) C_0.
  auto h3 = structure_constants(t, s0, g.parse("1.0"));
  CHECK(h3 == std::map<AffineElement, LaurentPoly>{{g.parse("0.1.0"), 1}, {s0, 1}});
  CHECK(t.mu(*t.find(s0), *t.find(g.parse("1.0"))) == 1);
}

TEST_CASE("W-graph products agree with multiplication in the T basis") {
  AffineWeylGroup g(TypeLabel::C2);
  HeckeAlgebra h(g);
  KLTable t(g, 10);
  for (Index x = 0; x < t.count_up_to(3); ++x)
    for (Index y = 0; y < t.count_up_to(4); ++y) {
      HeckeElement direct = h.mul_standard(t.canonical_element(x), t.canonical_element(y));
      CHECK(t.to_canonical(direct) == t.from_vec(t.product(x, y)));
    }
}

TEST_CASE("cells of A1~ and A2~") {
  {
    AffineWeylGroup g(TypeLabel::A1);
    KLTable t(g, required_table_bound(8));
    CellPartition p(t, 8);
    REQUIRE(p.cells().size() == 2);
    CHECK(p.all_complete());
    CHECK(p.cell(p.cell_of_identity()).members.size() == 1);
    CHECK(p.lowest_cell() == 1);
    CHECK(p.strictly_below(1, 0));
    CHECK(!p.strictly_below(0, 1));
    CHECK(p.order_pairs() == std::vector<std::pair<int, int>>{{1, 0}});
    CHECK(p.left_cells().size() == 3);
  }
  {
    AffineWeylGroup g(TypeLabel::A2);
    KLTable t(g, required_table_bound(12));
    CellPartition p(t, 12);
    REQUIRE(p.cells().size() == 3);
    CHECK(p.all_complete());
    const int low = p.lowest_cell();
    CHECK(p.strictly_below(low, p.cell_of_identity()));
    for (const auto& c : p.cells())
      if (c.index != low && c.index != p.cell_of_identity()) {
        CHECK(p.strictly_below(low, c.index));
        CHECK(p.strictly_below(c.index, p.cell_of_identity()));
        for (int s = 0; s < 3; ++s) CHECK(p.cell_of(*t.find(g.generator(s))) == c.index);
      }
    // The lowest cell contains the longest element of W_f.
    CHECK(p.cell_of(*t.find(g.parse("1.2.1"))) == low);
  }
}

TEST_CASE("a cell bound needs the check margin in the table") {
  AffineWeylGroup g(TypeLabel::A1);
  KLTable t(g, 8);
  CHECK_THROWS_AS(CellPartition(t, 8), BoundExceeded);
}
