#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affcell/dual.hpp"
#include "affcell/errors.hpp"
#include "affcell/workspace.hpp"

#include <algorithm>

using namespace affcell;

TEST_CASE("class lists") {
  const std::pair<TypeLabel, std::vector<int>> expected[] = {
      {TypeLabel::A1, {0, 1}},
      {TypeLabel::A2, {0, 1, 3}},
      {TypeLabel::C2, {0, 1, 2, 4}},
      {TypeLabel::G2, {0, 1, 2, 3, 6}},
  };
  for (const auto& [type, dims] : expected) {
    CartanDatum d(type);
    const auto classes = unipotent_classes(d);
    std::vector<int> sd;
    for (const auto& c : classes) {
      sd.push_back(c.springer_dim);
      CHECK(c.dim_orbit + c.dim_centralizer == static_cast<int>(d.dual_group_dimension()));
      CHECK(c.dim_centralizer == static_cast<int>(d.rank()) + 2 * c.springer_dim);
      CHECK(c.dynkin_marks.size() == d.rank());
    }
    std::sort(sd.begin(), sd.end());
    CHECK(sd == dims);
    CHECK(classes.front().springer_dim == 0);
    CHECK(classes.back().springer_dim == static_cast<int>(d.positive_root_count()));
  }
}

TEST_CASE("Jacobson-Morozov gradings") {
  CartanDatum a1(TypeLabel::A1), a2(TypeLabel::A2);
  const auto c1 = unipotent_classes(a1);
  CHECK(jm_graded_dims(a1, Coweight{2}, c1.front()) == std::map<int, long long>{{-2, 1}, {0, 1}, {2, 1}});
  CHECK(trace_sv(a1, Coweight{2}, c1.front()) == LaurentPoly::monomial(2) + 1 + LaurentPoly::monomial(-2));
  CHECK(trace_sv(a1, Coweight{2}, c1.back()) == LaurentPoly(3));
  const auto c2 = unipotent_classes(a2);
  CHECK(jm_graded_dims(a2, Coweight{1, 1}, c2.front()) ==
        std::map<int, long long>{{-4, 1}, {-2, 2}, {0, 2}, {2, 2}, {4, 1}});
  for (TypeLabel type : {TypeLabel::A1, TypeLabel::A2, TypeLabel::C2, TypeLabel::G2}) {
    CartanDatum d(type);
    for (const auto& c : unipotent_classes(d)) {
      CHECK(trace_sv(d, d.zero(), c) == LaurentPoly(1));
      CHECK(trace_sv(d, d.dual_rho(), c).at_one() == weyl_dimension(d, d.dual_rho()));
      CHECK(trace_sv(d, d.dual_rho(), c).is_bar_invariant());
    }
    const auto trivial = unipotent_classes(d).back();
    CHECK(trace_sv(d, d.dual_rho(), trivial) == LaurentPoly(weyl_dimension(d, d.dual_rho())));
  }
}

TEST_CASE("grade of the highest root at the regular class") {
  CartanDatum g2(TypeLabel::G2);
  const auto regular = unipotent_classes(g2).front();
  // h = 2 rho^vee pairs with the highest root of the dual G2 (height 5) to 10.
  int top = 0;
  for (const auto& [mu, m] : weight_multiplicities(g2, Coweight{1, 0})) top = std::max(top, grade_of(g2, mu, regular));
  for (const auto& [mu, m] : weight_multiplicities(g2, Coweight{0, 1})) top = std::max(top, grade_of(g2, mu, regular));
  CHECK(top == 10);
}

TEST_CASE("matching cells with classes") {
  Workspace a2(TypeLabel::A2, 12);
  const auto m = match_cells_to_classes(summarize_cells(a2.ring()), unipotent_classes(a2.datum()));
  REQUIRE(m.size() == 3);
  CHECK(m[static_cast<std::size_t>(a2.partition().cell_of_identity())].second == "regular");
  CHECK(m[static_cast<std::size_t>(a2.partition().lowest_cell())].second == "trivial");
  CHECK_THROWS_AS(match_cells_to_classes(summarize_cells(a2.ring()), unipotent_classes(CartanDatum(TypeLabel::A1))),
                  NoBijection);
}
