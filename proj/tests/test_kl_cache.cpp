#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affcell/errors.hpp"
#include "affcell/kl_cache.hpp"
#include "affcell/kl_table.hpp"

#include <filesystem>
#include <fstream>
#include <random>

using namespace affcell;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  static std::mt19937_64 rng(std::random_device{}());
  fs::path dir = fs::temp_directory_path() / ("affcell-test-" + std::to_string(rng()));
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

} // namespace

TEST_CASE("polynomial encoding") {
  const LaurentPoly p = LaurentPoly::monomial(3, 2) + LaurentPoly::monomial(-1, -7) + 1;
  CHECK(encode_poly(p) == "-1:-7,0:1,3:2");
  CHECK(decode_poly(encode_poly(p)) == p);
  CHECK(encode_poly(LaurentPoly()) == "0");
  CHECK(decode_poly("0").is_zero());
  CHECK_THROWS_AS(decode_poly("1:x"), CacheFormatError);
}

TEST_CASE("header") {
  const std::string h = cache_header_line(TypeLabel::A2);
  CHECK(h.find("A2~") != std::string::npos);
  CHECK(h.find(kConventionId) != std::string::npos);
  CHECK(default_cache_file("/tmp/x", TypeLabel::G2) == fs::path("/tmp/x/G2.klcache"));
}

TEST_CASE("rows and products persist") {
  const fs::path file = temp_file("A1.klcache");
  {
    KLCache c(TypeLabel::A1);
    c.open(file);
    c.put_row("0.1", {{"e", LaurentPoly::monomial(2)}, {"0", LaurentPoly::v()}});
    c.put_product("0", "0", {{"0", LaurentPoly::v() + LaurentPoly::v_inv()}});
    c.flush();
  }
  KLCache c(TypeLabel::A1);
  c.open(file);
  CHECK(c.row_count() == 1);
  CHECK(c.product_count() == 1);
  CHECK(c.lookup("e", "0.1") == LaurentPoly::monomial(2));
  CHECK(c.lookup("0.1", "0.1") == LaurentPoly(1));
  CHECK(!c.lookup("e", "1.0"));
  CHECK(c.has_product("0", "0"));
  CHECK(c.product("0", "0")->front().second == LaurentPoly::v() + LaurentPoly::v_inv());
}

TEST_CASE("interrupted appends are ignored") {
  const fs::path file = temp_file("A1.klcache");
  {
    std::ofstream out(file);
    out << cache_header_line(TypeLabel::A1) << "\n";
    out << "K e 0 1:1\nK 0 0 0:1\n";
    out << "K e 0.1 2:1\n";                // row without its closing record
    out << "H 0 0 0 -1:1,1:1\nH 0 0 .\n";
    out << "H 1 1 1 -1:1";                 // truncated final line
  }
  KLCache c(TypeLabel::A1);
  c.open(file);
  CHECK(c.row_count() == 1);
  CHECK(!c.row("0.1"));
  CHECK(c.product_count() == 1);
  CHECK(!c.has_product("1", "1"));
}

TEST_CASE("a foreign header is rejected") {
  const fs::path file = temp_file("A2.klcache");
  {
    std::ofstream out(file);
    out << cache_header_line(TypeLabel::A1) << "\n";
  }
  KLCache c(TypeLabel::A2);
  CHECK_THROWS_AS(c.open(file), CacheFormatError);
  {
    std::ofstream out(file);
    out << "affcell-klcache 1 A2~ some-other-normalization\n";
  }
  KLCache d(TypeLabel::A2);
  CHECK_THROWS_AS(d.open(file), CacheFormatError);
}

TEST_CASE("tables built from the cache equal computed tables") {
  const fs::path file = temp_file("A2.klcache");
  AffineWeylGroup g(TypeLabel::A2);
  KLTable direct(g, 9);
  {
    KLCache c(TypeLabel::A2);
    c.open(file);
    KLTable cold(g, 9, &c);
    CHECK(cold.rows_from_cache() == 0);
  }
  const std::string bytes = slurp(file);
  KLCache c(TypeLabel::A2);
  c.open(file);
  KLTable warm(g, 9, &c);
  CHECK(warm.rows_from_cache() == static_cast<std::size_t>(warm.size()));
  CHECK(slurp(file) == bytes);
  for (Index w = 0; w < direct.size(); ++w)
    for (Index x = 0; x <= w; ++x) CHECK(warm.p(x, w) == direct.p(x, w));
  // A larger table reuses the stored rows and appends the rest.
  KLTable bigger(g, 11, &c);
  CHECK(bigger.rows_from_cache() == static_cast<std::size_t>(warm.size()));
}
