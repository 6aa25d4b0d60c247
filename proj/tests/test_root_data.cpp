#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affcell/errors.hpp"
#include "affcell/root_data.hpp"

using namespace affcell;

namespace {

const TypeLabel kTypes[] = {TypeLabel::A1, TypeLabel::A2, TypeLabel::C2, TypeLabel::G2};

/// Character of V_a (x) V_b by convolving weight multiplicities.
WeightMultiplicities character_product(const CartanDatum& d, const Coweight& a, const Coweight& b) {
  WeightMultiplicities out;
  for (const auto& [x, m] : weight_multiplicities(d, a))
    for (const auto& [y, n] : weight_multiplicities(d, b)) out[x + y] += m * n;
  return out;
}

std::vector<Coweight> dominant_box(const CartanDatum& d, int max) {
  std::vector<Coweight> out;
  if (d.rank() == 1) {
    for (int i = 0; i <= max; ++i) out.push_back(Coweight{i});
  } else {
    for (int i = 0; i <= max; ++i)
      for (int j = 0; j <= max; ++j) out.push_back(Coweight{i, j});
  }
  return out;
}

} // namespace

TEST_CASE("type labels") {
  CHECK(parse_type_label("A2~") == TypeLabel::A2);
  CHECK(parse_type_label("G2") == TypeLabel::G2);
  CHECK(parse_type_label("B2~") == TypeLabel::C2);
  CHECK_THROWS_AS(parse_type_label("E8~"), Error);
  CHECK(affine_name(TypeLabel::C2) == "C2~");
}

TEST_CASE("finite Weyl groups") {
  const std::size_t sizes[] = {2, 6, 8, 12};
  const std::size_t roots[] = {1, 3, 4, 6};
  for (int i = 0; i < 4; ++i) {
    CartanDatum d(kTypes[i]);
    CHECK(d.weyl().size() == sizes[i]);
    CHECK(d.positive_root_count() == roots[i]);
    CHECK(d.weyl().length(d.weyl().longest()) == static_cast<int>(roots[i]));
    for (std::size_t u = 0; u < d.weyl().size(); ++u) {
      const auto ui = static_cast<FiniteWeylGroup::Index>(u);
      CHECK(d.weyl().multiply(ui, d.weyl().inverse(ui)) == d.weyl().identity());
    }
  }
}

TEST_CASE("orbits") {
  CartanDatum a1(TypeLabel::A1), a2(TypeLabel::A2);
  CHECK(weyl_orbit(a1, Coweight{1}) == std::set<Coweight>{Coweight{1}, Coweight{-1}});
  CHECK(weyl_orbit(a2, a2.zero()).size() == 1);
  CHECK(weyl_orbit(a2, Coweight{1, 0}).size() == 3);
  CHECK(weyl_orbit(a2, Coweight{1, 1}).size() == 6);
}

TEST_CASE("weight multiplicities") {
  CartanDatum a1(TypeLabel::A1), a2(TypeLabel::A2);
  CHECK(weight_multiplicities(a1, Coweight{2}) ==
        WeightMultiplicities{{Coweight{-2}, 1}, {Coweight{0}, 1}, {Coweight{2}, 1}});
  CHECK(weight_multiplicities(a2, a2.zero()) == WeightMultiplicities{{a2.zero(), 1}});
  const auto adj = weight_multiplicities(a2, Coweight{1, 1});
  long long total = 0;
  for (const auto& [w, m] : adj) total += m;
  CHECK(total == 8);
  CHECK(adj.at(a2.zero()) == 2);
  CHECK_THROWS_AS(weight_multiplicities(a2, Coweight{-1, 2}), NonDominant);
}

TEST_CASE("Freudenthal agrees with the Weyl dimension formula") {
  for (TypeLabel t : kTypes) {
    CartanDatum d(t);
    for (const auto& l : dominant_box(d, 3)) {
      long long total = 0;
      for (const auto& [w, m] : weight_multiplicities(d, l)) {
        total += m;
        CHECK(weight_multiplicities(d, l).at(d.dominant_representative(w)) == m);
      }
      CHECK(Integer(total) == weyl_dimension(d, l));
    }
  }
  CHECK(weyl_dimension(CartanDatum(TypeLabel::G2), Coweight{1, 0}) + weyl_dimension(CartanDatum(TypeLabel::G2), Coweight{0, 1}) == 21);
}

TEST_CASE("tensor products match the character product") {
  CartanDatum a1(TypeLabel::A1), a2(TypeLabel::A2);
  CHECK(tensor_decompose(a1, Coweight{2}, Coweight{2}) ==
        WeightMultiplicities{{Coweight{0}, 1}, {Coweight{2}, 1}, {Coweight{4}, 1}});
  CHECK(tensor_decompose(a2, a2.zero(), Coweight{2, 1}) == WeightMultiplicities{{Coweight{2, 1}, 1}});
  Integer dim = 0;
  for (const auto& [nu, m] : tensor_decompose(a2, Coweight{1, 1}, Coweight{1, 1})) dim += weyl_dimension(a2, nu) * m;
  CHECK(dim == 64);
  for (TypeLabel t : kTypes) {
    CartanDatum d(t);
    const auto box = dominant_box(d, 2);
    for (const auto& a : box)
      for (const auto& b : box) {
        WeightMultiplicities expect;
        for (const auto& [nu, m] : tensor_decompose(d, a, b))
          for (const auto& [w, k] : weight_multiplicities(d, nu)) expect[w] += m * k;
        CHECK(expect == character_product(d, a, b));
      }
  }
}

TEST_CASE("small dominant coweights are ordered by translation length") {
  for (TypeLabel t : kTypes) {
    CartanDatum d(t);
    const auto ls = small_dominant_coweights(d, 4);
    REQUIRE(ls.size() == 4);
    for (std::size_t i = 0; i < ls.size(); ++i) {
      CHECK(d.is_dominant(ls[i]));
      CHECK(d.in_coroot_lattice(ls[i]));
      CHECK(!ls[i].is_zero());
      if (i) CHECK(d.translation_length(ls[i - 1]) <= d.translation_length(ls[i]));
    }
  }
  CHECK(small_dominant_coweights(CartanDatum(TypeLabel::A1), 2) == std::vector<Coweight>{Coweight{2}, Coweight{4}});
  CHECK(small_dominant_coweights(CartanDatum(TypeLabel::A2), 2) ==
        std::vector<Coweight>{Coweight{1, 1}, Coweight{3, 0}});
}
